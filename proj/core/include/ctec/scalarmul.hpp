#pragma once

#include <ctec/curve.hpp>

#include <vector>

namespace ctec {

/// Regular (Joye-Tunstall) signed-digit recoding: every digit odd and
/// |d| <= 2^w - 1, so the operation schedule is fixed.
struct RegularNafDigits {
      std::vector<std::int8_t> digits;  // least significant first
      limb_t parity_fix = 0;            // 1 if the input was even (k+1 was recoded)
      unsigned window = 0;
};

/// Recode k (< 2^bits) with ceil((bits+1)/w) digits, or digit_count if that
/// is larger. Constant time for fixed (bits, w, digit_count).
RegularNafDigits recode_regular_naf(const LimbArray& k, std::size_t bits, unsigned w, std::size_t digit_count = 0);

RegularNafDigits recode_regular_naf(const ScalarField& sf, const Scalar& k, unsigned w);

/// Digits times powers of 2^w, minus parity_fix; for tests.
LimbArray reconstruct_regular_naf(const RegularNafDigits& r);

/// Odd-multiple fixed-base tables.
struct CombTables {
      unsigned window = 0;
      unsigned teeth = 0;         // beta
      std::size_t digits = 0;     // n = ceil((bitlen(q)+1)/w)
      std::size_t spacing = 0;    // ceil(n/beta); the stride in bits is window*spacing
      std::vector<AffinePoint> w;     // teeth * 2^(w-1), Weierstrass model
      std::vector<AffinePointTE> te;  // same layout, Edwards model

      std::size_t entries() const { return std::size_t{1} << (window - 1); }

      /// Bytes of table data under the sizing rule: two coordinates per entry.
      std::size_t footprint(std::size_t field_bytes) const { return teeth * entries() * 2 * field_bytes; }
};

/// Largest beta <= 8 with beta * 2^(w-1) * 2 * field_bytes <= budget (at least 1).
unsigned comb_teeth(std::size_t field_bytes, unsigned w, std::size_t l1_budget);

/// Table j, entry i holds [(2i+1) * 2^(w*j*spacing)]g, computed with the
/// oracle and converted once.
CombTables build_comb_tables(const Curve& curve, unsigned w, std::size_t l1_budget);

/// [k]P by regular NAF: 2^(w-1) odd multiples, w doublings plus one
/// lookup-addition per digit, and a selected trailing subtraction.
/// Throws Error(InvalidPoint) for an off-curve P and Error(OutOfRange) if k >= q.
ProjPointW mul_varbase(const Curve& curve, const ProjPointW& P, const Scalar& k);

/// As mul_varbase but for an unreduced k with the digit schedule of k.bits.
ProjPointW mul_varbase_wide(const Curve& curve, const ProjPointW& P, const WideScalar& k);

/// [k]g by the comb method.
ProjPointW mul_fixedbase(const Curve& curve, const Scalar& k);

ProjPointW mul_fixedbase(const Curve& curve, const CombTables& tables, const Scalar& k);

/// [k]B: comb when B is the curve generator, mul_varbase otherwise.
ProjPointW mul_base(const Curve& curve, const AffinePoint& B, const Scalar& k);

/// [k]g + [l]P with interleaved wNAF (Shamir). Variable time: public
/// inputs only. Throws Error(InvalidPoint) for an off-curve P.
ProjPointW mul_double(const Curve& curve, const Scalar& k, const ProjPointW& P, const Scalar& l);

/// The integer h*k, unreduced.
WideScalar clear_cofactor_scalar(const Curve& curve, const Scalar& k);

/// [h]P by log2(h) doublings in the Weierstrass model.
ProjPointW clear_cofactor(const Curve& curve, const ProjPointW& P);

/// [h*k]P computed as [k]([h]P); the product h*k is never reduced mod q.
ProjPointW mul_cofactor_varbase(const Curve& curve, const ProjPointW& P, const Scalar& k);

}  // namespace ctec
