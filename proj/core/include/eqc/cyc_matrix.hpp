#pragma once

#include <vector>

#include "eqc/cocycle.hpp"
#include "eqc/cyc.hpp"

namespace eqc {

/// Dense matrix over the cyclotomic field, used for explicit projective
/// representations and invariant projectors.
class CycMatrix {
  public:
    CycMatrix() : rows_(0), cols_(0) {}
    CycMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static CycMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Cyc& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Cyc& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    CycMatrix operator*(const CycMatrix& o) const;
    CycMatrix operator+(const CycMatrix& o) const;
    CycMatrix scaled(const Cyc& s) const;
    CycMatrix scaled(const Rational& s) const;

    friend bool operator==(const CycMatrix& a, const CycMatrix& b);
    friend bool operator!=(const CycMatrix& a, const CycMatrix& b) { return !(a == b); }

  private:
    int rows_, cols_;
    std::vector<Cyc> a_;
};

/// Explicit alpha-representation: one square matrix per group element with
/// R(g) R(h) = zeta_d^{alpha(g,h)} R(gh).
struct ProjectiveRep {
    Cocycle2 alpha;
    std::vector<CycMatrix> mats;

    int dim() const { return mats.empty() ? 0 : mats[0].rows(); }
};

/// Checks the twisted multiplication rule on all pairs. Throws on failure.
void verify_projective_rep(const ProjectiveRep& R);

/// The regular alpha-representation on basis {e_h}: R(g) e_h = zeta^{alpha(g,h)} e_{gh}.
ProjectiveRep regular_projective_rep(const Cocycle2& alpha);

/// Equivariant averaging p' = (1/|G|) sum_g R(g) p R(g)^{-1}, computed
/// without matrix inversion: the twisted rule forces R(e) = zeta^{alpha(e,e)} I,
/// hence R(g)^{-1} = zeta^{-alpha(g,g^{-1}) - alpha(e,e)} R(g^{-1}).
///
/// Preconditions (verified): R is an alpha-representation and p is idempotent.
/// Postconditions (verified): p' is idempotent and commutes with every R(g).
/// Input p must project onto an invariant subspace for the postconditions to
/// hold; violations surface as verification errors.
CycMatrix average_projector(const ProjectiveRep& R, const CycMatrix& p);

}  // namespace eqc
