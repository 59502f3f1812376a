#include "eqc/cyc_matrix.hpp"

namespace eqc {

CycMatrix CycMatrix::identity(int n) {
    CycMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Cyc(Rational(1));
    return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
    if (cols_ != o.rows_) throw InvalidInput("matrix shape mismatch");
    CycMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Cyc& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += aik * o.at(k, j);
            }
        }
    return r;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix shape mismatch");
    CycMatrix r = *this;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

CycMatrix CycMatrix::scaled(const Cyc& s) const {
    CycMatrix r = *this;
    for (Cyc& v : r.a_) v *= s;
    return r;
}

CycMatrix CycMatrix::scaled(const Rational& s) const {
    CycMatrix r = *this;
    for (Cyc& v : r.a_) v *= s;
    return r;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    return a.a_ == b.a_;
}

void verify_projective_rep(const ProjectiveRep& R) {
    const FiniteGroup& G = *R.alpha.G;
    if (static_cast<int>(R.mats.size()) != G.order())
        throw InvalidInput("one matrix per group element required");
    const int dim = R.dim();
    for (const CycMatrix& m : R.mats)
        if (m.rows() != dim || m.cols() != dim) throw InvalidInput("matrices must be square");
    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h) {
            CycMatrix lhs = R.mats[g] * R.mats[h];
            CycMatrix rhs = R.mats[G.mul(g, h)].scaled(Cyc::zeta(R.alpha.d, R.alpha.table[g][h]));
            if (lhs != rhs) throw Error("projective representation relation fails");
        }
}

ProjectiveRep regular_projective_rep(const Cocycle2& alpha) {
    const FiniteGroup& G = *alpha.G;
    ProjectiveRep R{alpha, {}};
    R.mats.reserve(G.order());
    for (int g = 0; g < G.order(); ++g) {
        CycMatrix m(G.order(), G.order());
        for (int h = 0; h < G.order(); ++h)
            m.at(G.mul(g, h), h) = Cyc::zeta(alpha.d, alpha.table[g][h]);
        R.mats.push_back(std::move(m));
    }
    return R;
}

CycMatrix average_projector(const ProjectiveRep& R, const CycMatrix& p) {
    verify_projective_rep(R);
    const FiniteGroup& G = *R.alpha.G;
    const int dim = R.dim();
    if (p.rows() != dim || p.cols() != dim) throw InvalidInput("projector shape mismatch");
    if (!(p * p == p)) throw InvalidInput("input is not idempotent");

    const int e = G.identity();
    CycMatrix acc(dim, dim);
    for (int g = 0; g < G.order(); ++g) {
        const int gi = G.inverse(g);
        // R(g)^{-1} = zeta^{-alpha(g, g^{-1}) - alpha(e, e)} R(g^{-1}).
        Cyc scale = Cyc::zeta(R.alpha.d, -R.alpha.table[g][gi] - R.alpha.table[e][e]);
        acc = acc + (R.mats[g] * p * R.mats[gi].scaled(scale));
    }
    CycMatrix avg = acc.scaled(frac(1, G.order()));

    if (!(avg * avg == avg)) throw Error("averaged projector is not idempotent");
    for (int g = 0; g < G.order(); ++g)
        if (!(R.mats[g] * avg == avg * R.mats[g]))
            throw Error("averaged projector does not commute with the action");
    return avg;
}

}  // namespace eqc
