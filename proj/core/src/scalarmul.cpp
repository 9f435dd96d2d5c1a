#include <ctec/scalarmul.hpp>

#include <ctec/error.hpp>
#include <ctec/oracle.hpp>

namespace ctec {

RegularNafDigits recode_regular_naf(const LimbArray& k, std::size_t bits, unsigned w, std::size_t digit_count) {
   if(w < 2 || w > 7) {
      throw_error(ErrorCode::InvalidArgument, "window must be in [2, 7]");
   }
   const std::size_t n = std::max<std::size_t>((bits + 1 + w - 1) / w, digit_count);
   RegularNafDigits r;
   r.window = w;
   r.digits.resize(n);
   r.parity_fix = (k[0] & 1) ^ 1;

   // m = k | 1 equals k + parity_fix.
   LimbArray m = k;
   m[0] |= 1;
   const limb_t low_mask = (static_cast<limb_t>(1) << (w + 1)) - 1;
   const limb_t half = static_cast<limb_t>(1) << w;
   for(std::size_t i = 0; i + 1 < n; ++i) {
      // m odd: d = (m mod 2^(w+1)) - 2^w is odd, and (m - d)/2^w is again
      // odd, namely (m >> w) with its low bit forced to one.
      const limb_t low = m[0] & low_mask;
      r.digits[i] = static_cast<std::int8_t>(static_cast<std::int32_t>(low) - static_cast<std::int32_t>(half));
      limbs::shift_right_small(m, w);
      m[0] |= 1;
   }
   r.digits[n - 1] = static_cast<std::int8_t>(m[0]);
   return r;
}

RegularNafDigits recode_regular_naf(const ScalarField& sf, const Scalar& k, unsigned w) {
   return recode_regular_naf(k.limbs, sf.bit_length(), w);
}

LimbArray reconstruct_regular_naf(const RegularNafDigits& r) {
   // Horner from the top digit, tracking sign with two accumulators.
   LimbArray pos{}, neg{};
   for(std::size_t i = r.digits.size(); i-- > 0;) {
      for(unsigned j = 0; j != r.window; ++j) {
         limbs::add(pos, pos, kMaxLimbs);
         limbs::add(neg, neg, kMaxLimbs);
      }
      const int d = r.digits[i];
      if(d >= 0) {
         limbs::add_word(pos, static_cast<limb_t>(d), kMaxLimbs);
      } else {
         limbs::add_word(neg, static_cast<limb_t>(-d), kMaxLimbs);
      }
   }
   limbs::sub(pos, neg, kMaxLimbs);
   limbs::sub(pos, limbs::from_u64(r.parity_fix), kMaxLimbs);
   return pos;
}

namespace {

struct WOps {
      const WCurve& c;
      using Proj = ProjPointW;
      using Aff = AffinePoint;

      Proj identity() const { return w_identity(c); }

      Proj add(const Proj& P, const Proj& Q) const { return w_add(c, P, Q); }

      Proj dbl(const Proj& P) const { return w_dbl(c, P); }

      Proj mixed(const Proj& P, const Aff& Q) const { return w_add_mixed(c, P, Q); }

      Proj neg(const Proj& P) const { return w_neg(c, P); }

      Aff neg(const Aff& P) const { return w_neg(c, P); }

      Proj select(limb_t f, const Proj& P, const Proj& Q) const { return w_select(c, f, P, Q); }

      Proj lookup(std::span<const Proj> t, std::size_t i, limb_t n) const { return w_table_lookup(c, t, i, n); }

      Aff lookup(std::span<const Aff> t, std::size_t i, limb_t n) const { return w_table_lookup(c, t, i, n); }

      static const std::vector<Aff>& table(const CombTables& t) { return t.w; }
};

struct TEOps {
      const TECurve& c;
      using Proj = ExtPointTE;
      using Aff = AffinePointTE;

      Proj identity() const { return te_identity(c); }

      Proj add(const Proj& P, const Proj& Q) const { return te_add(c, P, Q); }

      Proj dbl(const Proj& P) const { return te_dbl(c, P); }

      Proj mixed(const Proj& P, const Aff& Q) const { return te_add_mixed(c, P, Q); }

      Proj neg(const Proj& P) const { return te_neg(c, P); }

      Aff neg(const Aff& P) const { return te_cneg(c, P, 1); }

      Proj select(limb_t f, const Proj& P, const Proj& Q) const { return te_select(c, f, P, Q); }

      Proj lookup(std::span<const Proj> t, std::size_t i, limb_t n) const { return te_table_lookup(c, t, i, n); }

      Aff lookup(std::span<const Aff> t, std::size_t i, limb_t n) const { return te_table_lookup(c, t, i, n); }

      static const std::vector<Aff>& table(const CombTables& t) { return t.te; }
};

/// Table index and sign of an odd digit, without branches.
struct DigitIndex {
      std::size_t index;
      limb_t negate;
};

DigitIndex split_digit(std::int8_t d) {
   const auto u = static_cast<std::uint8_t>(d);
   const limb_t neg = u >> 7;
   const auto mag = static_cast<std::uint8_t>((u ^ static_cast<std::uint8_t>(0U - neg)) + neg);
   return DigitIndex{static_cast<std::size_t>(mag >> 1), neg};
}

template <typename Ops>
typename Ops::Proj varbase(const Ops& ops, const typename Ops::Proj& P, const RegularNafDigits& r) {
   using Proj = typename Ops::Proj;
   const std::size_t m = std::size_t{1} << (r.window - 1);
   std::vector<Proj> T(m);
   T[0] = P;
   const Proj P2 = ops.dbl(P);
   for(std::size_t i = 1; i != m; ++i) {
      T[i] = ops.add(T[i - 1], P2);
   }

   const std::size_t n = r.digits.size();
   DigitIndex di = split_digit(r.digits[n - 1]);
   Proj acc = ops.lookup(T, di.index, di.negate);
   for(std::size_t i = n - 1; i-- > 0;) {
      for(unsigned j = 0; j != r.window; ++j) {
         acc = ops.dbl(acc);
      }
      di = split_digit(r.digits[i]);
      acc = ops.add(acc, ops.lookup(T, di.index, di.negate));
   }
   const Proj corrected = ops.add(acc, ops.neg(P));
   return ops.select(r.parity_fix, corrected, acc);
}

template <typename Ops>
typename Ops::Proj comb(const Ops& ops,
                        const CombTables& tables,
                        const typename Ops::Aff& g,
                        const RegularNafDigits& r) {
   using Proj = typename Ops::Proj;
   const auto& all = Ops::table(tables);
   const std::size_t m = tables.entries();
   const std::size_t c = tables.spacing;
   Proj acc = ops.identity();
   for(std::size_t t = c; t-- > 0;) {
      if(t + 1 != c) {
         for(unsigned j = 0; j != tables.window; ++j) {
            acc = ops.dbl(acc);
         }
      }
      for(std::size_t j = 0; j != tables.teeth; ++j) {
         const DigitIndex di = split_digit(r.digits[j * c + t]);
         const std::span<const typename Ops::Aff> tooth(all.data() + j * m, m);
         acc = ops.mixed(acc, ops.lookup(tooth, di.index, di.negate));
      }
   }
   const Proj corrected = ops.mixed(acc, ops.neg(g));
   return ops.select(r.parity_fix, corrected, acc);
}

/// Width-w NAF, least significant first. Variable time.
std::vector<std::int8_t> wnaf(LimbArray k, unsigned w) {
   std::vector<std::int8_t> out;
   const limb_t mask = (static_cast<limb_t>(1) << w) - 1;
   const limb_t half = static_cast<limb_t>(1) << (w - 1);
   while(!limbs::is_zero(k)) {
      std::int8_t d = 0;
      if(k[0] & 1) {
         const limb_t mod = k[0] & mask;
         if(mod >= half) {
            d = static_cast<std::int8_t>(static_cast<int>(mod) - (1 << w));
            limbs::add_word(k, static_cast<limb_t>(-static_cast<int>(d)), kMaxLimbs);
         } else {
            d = static_cast<std::int8_t>(mod);
            limbs::sub(k, limbs::from_u64(mod), kMaxLimbs);
         }
      }
      out.push_back(d);
      limbs::shift_right_small(k, 1);
   }
   return out;
}

template <typename Ops>
typename Ops::Proj shamir(const Ops& ops,
                          const CombTables& tables,
                          const Scalar& k,
                          const typename Ops::Proj& P,
                          const Scalar& l) {
   using Proj = typename Ops::Proj;
   const auto& gt = Ops::table(tables);  // tooth 0: g, 3g, ..., (2^w - 1)g
   const unsigned wg = tables.window + 1;
   const unsigned wp = tables.window;
   const std::size_t mp = std::size_t{1} << (wp - 2);
   std::vector<Proj> pt(mp);
   pt[0] = P;
   const Proj P2 = ops.dbl(P);
   for(std::size_t i = 1; i != mp; ++i) {
      pt[i] = ops.add(pt[i - 1], P2);
   }
   const std::vector<std::int8_t> dk = wnaf(k.limbs, wg);
   const std::vector<std::int8_t> dl = wnaf(l.limbs, wp);
   Proj acc = ops.identity();
   for(std::size_t i = std::max(dk.size(), dl.size()); i-- > 0;) {
      acc = ops.dbl(acc);
      if(i < dk.size() && dk[i] != 0) {
         const int d = dk[i];
         const auto& e = gt[static_cast<std::size_t>(std::abs(d) >> 1)];
         acc = ops.mixed(acc, d > 0 ? e : ops.neg(e));
      }
      if(i < dl.size() && dl[i] != 0) {
         const int d = dl[i];
         const Proj& e = pt[static_cast<std::size_t>(std::abs(d) >> 1)];
         acc = ops.add(acc, d > 0 ? e : ops.neg(e));
      }
   }
   return acc;
}

void check_point(const Curve& curve, const ProjPointW& P) {
   if(!w_on_curve(curve.weierstrass(), P)) {
      throw_error(ErrorCode::InvalidPoint, "point not on " + curve.name());
   }
}

void check_scalar(const Curve& curve, const Scalar& k) {
   if(limbs::compare(k.limbs, curve.scalars().modulus(), kMaxLimbs) >= 0) {
      throw_error(ErrorCode::OutOfRange, "scalar not below q");
   }
}

ProjPointW varbase_dispatch(const Curve& curve, const ProjPointW& P, const RegularNafDigits& r) {
   if(curve.model() == Model::TwistedEdwards) {
      const TECurve& te = *curve.edwards();
      const ExtPointTE Pe = map_w_to_te(te, P);
      return map_te_to_w(te, varbase(TEOps{te}, Pe, r));
   }
   return varbase(WOps{curve.weierstrass()}, P, r);
}

}  // namespace

unsigned comb_teeth(std::size_t field_bytes, unsigned w, std::size_t l1_budget) {
   const std::size_t entry = (std::size_t{1} << (w - 1)) * 2 * field_bytes;
   unsigned beta = 8;
   while(beta > 1 && beta * entry > l1_budget) {
      --beta;
   }
   return beta;
}

CombTables build_comb_tables(const Curve& curve, unsigned w, std::size_t l1_budget) {
   const CurveDescriptor& desc = curve.descriptor();
   const oracle::Curve oc(desc);
   CombTables t;
   t.window = w;
   t.teeth = comb_teeth(curve.field().byte_length(), w, l1_budget);
   t.digits = (curve.scalars().bit_length() + 1 + w - 1) / w;
   t.spacing = (t.digits + t.teeth - 1) / t.teeth;
   const std::size_t m = t.entries();
   const std::size_t fb = curve.field().byte_length();
   const TECurve* te = curve.edwards();

   oracle::Point base = oc.generator();
   for(unsigned j = 0; j != t.teeth; ++j) {
      if(j != 0) {
         base = oc.mul(mpz_class(1) << static_cast<mp_bitcnt_t>(w * t.spacing), base);
      }
      const oracle::Point twice = oc.dbl(base);
      oracle::Point e = base;
      for(std::size_t i = 0; i != m; ++i) {
         const AffinePoint a{curve.fe(oracle::to_bytes(e.x, fb)), curve.fe(oracle::to_bytes(e.y, fb))};
         if(e.infinity || !w_on_curve(curve.weierstrass(), a)) {
            throw_error(ErrorCode::ValidationError, curve.name() + ": comb table entry not on curve");
         }
         t.w.push_back(a);
         if(te != nullptr) {
            const oracle::EdPoint ed = oc.to_edwards(e);
            const AffinePointTE at =
               te_make_affine(*te, curve.fe(oracle::to_bytes(ed.u, fb)), curve.fe(oracle::to_bytes(ed.v, fb)));
            if(!te_on_curve(*te, te_lift(*te, at))) {
               throw_error(ErrorCode::ValidationError, curve.name() + ": Edwards comb entry not on curve");
            }
            t.te.push_back(at);
         }
         e = oc.add(e, twice);
      }
   }
   return t;
}

ProjPointW mul_varbase(const Curve& curve, const ProjPointW& P, const Scalar& k) {
   check_point(curve, P);
   check_scalar(curve, k);
   return varbase_dispatch(curve, P, recode_regular_naf(curve.scalars(), k, curve.window()));
}

ProjPointW mul_varbase_wide(const Curve& curve, const ProjPointW& P, const WideScalar& k) {
   check_point(curve, P);
   if(k.bits > kMaxBits - 1 || limbs::bit_length(k.limbs, kMaxLimbs) > k.bits) {
      throw_error(ErrorCode::OutOfRange, "wide scalar exceeds its digit schedule");
   }
   return varbase_dispatch(curve, P, recode_regular_naf(k.limbs, k.bits, curve.window()));
}

ProjPointW mul_fixedbase(const Curve& curve, const CombTables& tables, const Scalar& k) {
   check_scalar(curve, k);
   const RegularNafDigits r = recode_regular_naf(k.limbs, curve.scalars().bit_length(), tables.window,
                                                 tables.teeth * tables.spacing);
   if(curve.model() == Model::TwistedEdwards) {
      const TECurve& te = *curve.edwards();
      return map_te_to_w(te, comb(TEOps{te}, tables, tables.te[0], r));
   }
   return comb(WOps{curve.weierstrass()}, tables, tables.w[0], r);
}

ProjPointW mul_fixedbase(const Curve& curve, const Scalar& k) {
   return mul_fixedbase(curve, curve.comb(), k);
}

ProjPointW mul_base(const Curve& curve, const AffinePoint& B, const Scalar& k) {
   if(B == curve.generator()) {
      return mul_fixedbase(curve, k);
   }
   return mul_varbase(curve, w_lift(curve.weierstrass(), B), k);
}

ProjPointW mul_double(const Curve& curve, const Scalar& k, const ProjPointW& P, const Scalar& l) {
   CTEC_COUNT_POINT(mul_double_calls);
   check_point(curve, P);
   check_scalar(curve, k);
   check_scalar(curve, l);
   const CombTables& tables = curve.comb();
   if(curve.model() == Model::TwistedEdwards) {
      const TECurve& te = *curve.edwards();
      return map_te_to_w(te, shamir(TEOps{te}, tables, k, map_w_to_te(te, P), l));
   }
   return shamir(WOps{curve.weierstrass()}, tables, k, P, l);
}

WideScalar clear_cofactor_scalar(const Curve& curve, const Scalar& k) {
   return curve.scalars().cofactor_multiple(k, curve.cofactor());
}

ProjPointW clear_cofactor(const Curve& curve, const ProjPointW& P) {
   ProjPointW R = P;
   for(unsigned h = curve.cofactor(); h > 1; h >>= 1) {
      R = w_dbl(curve.weierstrass(), R);
   }
   return R;
}

ProjPointW mul_cofactor_varbase(const Curve& curve, const ProjPointW& P, const Scalar& k) {
   check_point(curve, P);
   return mul_varbase(curve, clear_cofactor(curve, P), k);
}

}  // namespace ctec
