#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqc/rational.hpp"

namespace eqc {

/// Vector in the basis (L, E_1, ..., E_r); coordinates are multiplicities.
using PicVec = std::vector<long>;

/// Picard lattice of a del Pezzo surface: blow-up of the plane in r points,
/// intersection form diag(1, -1, ..., -1), K = -3L + sum E_i. r = 0 is the
/// plane itself.
struct PicLattice {
    int r = 0;

    int rank() const { return r + 1; }
    PicVec zero() const { return PicVec(rank(), 0); }
    PicVec L() const;
    PicVec E(int i) const;  // 1-based
    PicVec K() const;
    long dot(const PicVec& a, const PicVec& b) const;

    /// Display form such as "2L-E1-E2", "0".
    std::string vec_str(const PicVec& v) const;
};

/// Chern character data (rank, c1, ch2) used as the numerical K-class.
struct KClass {
    long rank = 0;
    PicVec c1;
    Rational ch2;

    friend bool operator==(const KClass& a, const KClass& b) {
        return a.rank == b.rank && a.c1 == b.c1 && a.ch2 == b.ch2;
    }
};

/// ch(O(D)) = (1, D, D^2/2).
KClass line_bundle_class(const PicLattice& lat, const PicVec& D);

/// ch(O_C(-1)) = (0, C, -1/2) for a (-1)-curve C (derived from
/// Grothendieck-Riemann-Roch for the pushforward from C).
KClass torsion_curve_class(const PicLattice& lat, const PicVec& C);

/// Euler pairing chi(A, B) from Riemann-Roch with td = (1, -K/2, 1):
/// chi = rA ch2B + rB ch2A - c1A.c1B - (K/2).(rA c1B - rB c1A) + rA rB.
/// Throws NonIntegralEuler when the rational value is not an integer.
Integer euler_pair(const PicLattice& lat, const KClass& A, const KClass& B);

std::vector<std::vector<Integer>> gram_matrix(const PicLattice& lat,
                                              const std::vector<KClass>& ks);

enum class MutationSide { Left, Right };

/// Adjacent mutation at (pos, pos+1): left sends (A,B) to (B - chi(A,B) A, A),
/// right sends (A,B) to (B, A - chi(A,B) B). When the input pair is
/// numerically exceptional the output pair is verified to be numerically
/// exceptional too.
void mutate(const PicLattice& lat, std::vector<KClass>& ks, int pos, MutationSide side);

struct MutationStep {
    int pos;
    MutationSide side;
};

/// Breadth-first search over mutation words of total length <= max_len
/// relating `from` to `to`; with up_to_sign, each position may match up to
/// sign (a homological shift negates a class). Letter order is deterministic:
/// position ascending, left before right. Returns the first word found.
std::optional<std::vector<MutationStep>> mutation_search(const PicLattice& lat,
                                                         const std::vector<KClass>& from,
                                                         const std::vector<KClass>& to,
                                                         int max_len, bool up_to_sign);

/// All classes C with C.C = C.K = -1, complete for r <= 4 (coefficient
/// bounds follow from Cauchy-Schwarz on the two constraints). Sorted by
/// (L-coefficient, then E-coefficients descending lexicographically).
std::vector<PicVec> minus_one_curves(const PicLattice& lat);

/// Lattice endomorphism given by an integer matrix in the (L, E_i) basis.
/// Construction verifies that it preserves the intersection form and fixes K.
class PicMap {
  public:
    PicMap(PicLattice lat, std::vector<std::vector<long>> mat);

    const PicLattice& lattice() const { return lat_; }
    const std::vector<std::vector<long>>& matrix() const { return mat_; }

    PicVec apply(const PicVec& v) const;
    KClass apply(const KClass& k) const;
    bool is_involution() const;

  private:
    PicLattice lat_;
    std::vector<std::vector<long>> mat_;
};

}  // namespace eqc
