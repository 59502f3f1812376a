#include "eqc/pic_lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "eqc/error.hpp"

namespace eqc {

PicVec PicLattice::L() const {
    PicVec v = zero();
    v[0] = 1;
    return v;
}

PicVec PicLattice::E(int i) const {
    if (i < 1 || i > r) throw InvalidInput("exceptional index out of range");
    PicVec v = zero();
    v[i] = 1;
    return v;
}

PicVec PicLattice::K() const {
    PicVec v(rank(), 1);
    v[0] = -3;
    return v;
}

long PicLattice::dot(const PicVec& a, const PicVec& b) const {
    if (static_cast<int>(a.size()) != rank() || static_cast<int>(b.size()) != rank())
        throw InvalidInput("lattice vector size mismatch");
    long s = a[0] * b[0];
    for (int i = 1; i <= r; ++i) s -= a[i] * b[i];
    return s;
}

std::string PicLattice::vec_str(const PicVec& v) const {
    std::ostringstream out;
    bool first = true;
    auto term = [&](long c, const std::string& name) {
        if (c == 0) return;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? "-" : "+");
        }
        first = false;
        long a = c < 0 ? -c : c;
        if (a != 1) out << a;
        out << name;
    };
    term(v[0], "L");
    for (int i = 1; i <= r; ++i) term(v[i], "E" + std::to_string(i));
    if (first) return "0";
    return out.str();
}

KClass line_bundle_class(const PicLattice& lat, const PicVec& D) {
    return KClass{1, D, frac(lat.dot(D, D), 2)};
}

KClass torsion_curve_class(const PicLattice& lat, const PicVec& C) {
    if (lat.dot(C, C) != -1 || lat.dot(C, lat.K()) != -1)
        throw InvalidInput("not a (-1)-curve: " + lat.vec_str(C));
    return KClass{0, C, frac(-1, 2)};
}

Integer euler_pair(const PicLattice& lat, const KClass& A, const KClass& B) {
    Rational chi = Rational(A.rank) * B.ch2 + Rational(B.rank) * A.ch2;
    chi -= Rational(lat.dot(A.c1, B.c1));
    PicVec mixed(lat.rank());
    for (int i = 0; i < lat.rank(); ++i) mixed[i] = A.rank * B.c1[i] - B.rank * A.c1[i];
    chi -= frac(lat.dot(lat.K(), mixed), 2);
    chi += Rational(A.rank) * Rational(B.rank);
    if (!is_integer(chi))
        throw NonIntegralEuler("Euler pairing is not integral: " + to_string(chi));
    return to_integer(chi);
}

std::vector<std::vector<Integer>> gram_matrix(const PicLattice& lat,
                                              const std::vector<KClass>& ks) {
    std::vector<std::vector<Integer>> g(ks.size(), std::vector<Integer>(ks.size()));
    for (std::size_t i = 0; i < ks.size(); ++i)
        for (std::size_t j = 0; j < ks.size(); ++j) g[i][j] = euler_pair(lat, ks[i], ks[j]);
    return g;
}

namespace {

KClass combine(const KClass& B, const Integer& c, const KClass& A) {
    // B - c * A.
    if (!c.fits_slong_p()) throw Error("mutation coefficient overflow");
    const long cl = c.get_si();
    KClass out;
    out.rank = B.rank - cl * A.rank;
    out.c1.resize(B.c1.size());
    for (std::size_t i = 0; i < B.c1.size(); ++i) out.c1[i] = B.c1[i] - cl * A.c1[i];
    out.ch2 = B.ch2 - Rational(cl) * A.ch2;
    return out;
}

bool pair_exceptional(const PicLattice& lat, const KClass& A, const KClass& B) {
    return euler_pair(lat, A, A) == 1 && euler_pair(lat, B, B) == 1 &&
           euler_pair(lat, B, A) == 0;
}

}  // namespace

void mutate(const PicLattice& lat, std::vector<KClass>& ks, int pos, MutationSide side) {
    if (pos < 0 || pos + 1 >= static_cast<int>(ks.size()))
        throw InvalidInput("mutation position out of range");
    KClass& A = ks[pos];
    KClass& B = ks[pos + 1];
    const bool was_exceptional = pair_exceptional(lat, A, B);
    const Integer c = euler_pair(lat, A, B);
    if (side == MutationSide::Left) {
        KClass moved = combine(B, c, A);
        B = A;
        A = std::move(moved);
    } else {
        KClass moved = combine(A, c, B);
        A = B;
        B = std::move(moved);
    }
    if (was_exceptional && !pair_exceptional(lat, ks[pos], ks[pos + 1]))
        throw Error("mutation broke numerical exceptionality");
}

namespace {

std::string kclass_key(const KClass& k) {
    std::ostringstream out;
    out << k.rank << "|";
    for (long c : k.c1) out << c << ",";
    out << "|" << to_string(k.ch2);
    return out.str();
}

std::string state_key(const std::vector<KClass>& ks) {
    std::string s;
    for (const KClass& k : ks) {
        s += kclass_key(k);
        s += ";";
    }
    return s;
}

bool matches(const std::vector<KClass>& a, const std::vector<KClass>& b, bool up_to_sign) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) continue;
        if (!up_to_sign) return false;
        KClass neg = combine(KClass{0, PicVec(a[i].c1.size(), 0), Rational(0)}, Integer(1), a[i]);
        if (!(neg == b[i])) return false;
    }
    return true;
}

}  // namespace

std::optional<std::vector<MutationStep>> mutation_search(const PicLattice& lat,
                                                         const std::vector<KClass>& from,
                                                         const std::vector<KClass>& to,
                                                         int max_len, bool up_to_sign) {
    if (from.size() != to.size()) throw InvalidInput("collections differ in length");
    struct Node {
        std::vector<KClass> state;
        std::vector<MutationStep> word;
    };
    std::deque<Node> queue;
    std::map<std::string, bool> seen;
    queue.push_back(Node{from, {}});
    seen[state_key(from)] = true;
    while (!queue.empty()) {
        Node cur = std::move(queue.front());
        queue.pop_front();
        if (matches(cur.state, to, up_to_sign)) return cur.word;
        if (static_cast<int>(cur.word.size()) >= max_len) continue;
        for (int pos = 0; pos + 1 < static_cast<int>(cur.state.size()); ++pos)
            for (MutationSide side : {MutationSide::Left, MutationSide::Right}) {
                std::vector<KClass> next = cur.state;
                try {
                    mutate(lat, next, pos, side);
                } catch (const Error&) {
                    continue;
                }
                std::string key = state_key(next);
                if (seen.count(key)) continue;
                seen[key] = true;
                std::vector<MutationStep> word = cur.word;
                word.push_back(MutationStep{pos, side});
                queue.push_back(Node{std::move(next), std::move(word)});
            }
    }
    return std::nullopt;
}

std::vector<PicVec> minus_one_curves(const PicLattice& lat) {
    if (lat.r > 4) throw InvalidInput("curve enumeration implemented for r <= 4");
    // C = aL + sum b_i E_i with C.C = C.K = -1. From sum b_i = 1 - 3a and
    // Cauchy-Schwarz (1-3a)^2 <= r (a^2+1), all solutions for r <= 4 have
    // a in {0, 1} and |b_i| <= 1; the scan range below is strictly larger.
    std::vector<PicVec> found;
    PicVec v(lat.rank(), 0);
    const PicVec K = lat.K();
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == lat.rank()) {
            if (lat.dot(v, v) == -1 && lat.dot(v, K) == -1) found.push_back(v);
            return;
        }
        for (long c = -2; c <= 2; ++c) {
            v[idx] = c;
            self(self, idx + 1);
        }
        v[idx] = 0;
    };
    rec(rec, 0);
    std::sort(found.begin(), found.end(), [](const PicVec& a, const PicVec& b) {
        if (a[0] != b[0]) return a[0] < b[0];
        for (std::size_t i = 1; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    });
    return found;
}

PicMap::PicMap(PicLattice lat, std::vector<std::vector<long>> mat)
    : lat_(lat), mat_(std::move(mat)) {
    const int n = lat_.rank();
    if (static_cast<int>(mat_.size()) != n) throw InvalidInput("lattice map size mismatch");
    for (const auto& row : mat_)
        if (static_cast<int>(row.size()) != n) throw InvalidInput("lattice map size mismatch");
    // Isometry on all basis pairs.
    std::vector<PicVec> images(n);
    for (int j = 0; j < n; ++j) {
        PicVec e(n, 0);
        e[j] = 1;
        images[j] = apply(e);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            PicVec ei(n, 0), ej(n, 0);
            ei[i] = 1;
            ej[j] = 1;
            if (lat_.dot(images[i], images[j]) != lat_.dot(ei, ej))
                throw InvalidInput("lattice map is not an isometry");
        }
    if (apply(lat_.K()) != lat_.K()) throw InvalidInput("lattice map does not fix K");
}

PicVec PicMap::apply(const PicVec& v) const {
    const int n = lat_.rank();
    if (static_cast<int>(v.size()) != n) throw InvalidInput("lattice vector size mismatch");
    PicVec out(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i] += mat_[i][j] * v[j];
    return out;
}

KClass PicMap::apply(const KClass& k) const { return KClass{k.rank, apply(k.c1), k.ch2}; }

bool PicMap::is_involution() const {
    const int n = lat_.rank();
    for (int j = 0; j < n; ++j) {
        PicVec e(n, 0);
        e[j] = 1;
        if (apply(apply(e)) != e) return false;
    }
    return true;
}

}  // namespace eqc
