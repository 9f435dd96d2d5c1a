#include <ctec/tepoint.hpp>

#include <ctec/error.hpp>

namespace ctec {

namespace {

FieldElement fe_from(const Field& F, std::span<const std::uint8_t> be) {
   LimbArray v{};
   limbs::from_bytes_be(v, be);
   for(std::size_t i = 0; limbs::compare(v, F.modulus(), kMaxLimbs) >= 0 && i != 8; ++i) {
      limbs::sub(v, F.modulus(), kMaxLimbs);
   }
   return F.from_canonical(v);
}

}  // namespace

TECurve::TECurve(const Field& f, const CurveDescriptor& desc) : field(&f) {
   const EdwardsConstants st = derive_edwards(desc);
   e = fe_from(f, desc.edwards->e);
   d = fe_from(f, desc.edwards->d);
   d2 = f.add(d, d);
   s = fe_from(f, st.s);
   t = fe_from(f, st.t);
   if(f.equal(e, f.one())) {
      kind = EKind::One;
   } else if(f.equal(e, f.neg(f.one()))) {
      kind = EKind::MinusOne;
   }
}

ExtPointTE te_identity(const TECurve& c) {
   const Field& F = c.F();
   return ExtPointTE{F.zero(), F.one(), F.zero(), F.one()};
}

ExtPointTE te_lift(const TECurve& c, const AffinePointTE& P) {
   return ExtPointTE{P.u, P.v, P.t, c.F().one()};
}

AffinePointTE te_make_affine(const TECurve& c, const FieldElement& u, const FieldElement& v) {
   return AffinePointTE{u, v, c.F().mul(u, v)};
}

namespace {

// Shared tail of the unified addition: inputs A..D as named in HWCD.
ExtPointTE add_core(const TECurve& c,
                    const ExtPointTE& P,
                    const FieldElement& X2,
                    const FieldElement& Y2,
                    const FieldElement& T2,
                    const FieldElement* Z2) {
   const Field& F = c.F();
   FieldElement A, B, C, D, E, Fv, G, H;
   if(c.kind == TECurve::EKind::MinusOne) {
      // add-2008-hwcd-3
      A = F.mul(F.sub(P.Y, P.X), F.sub(Y2, X2));
      B = F.mul(F.add(P.Y, P.X), F.add(Y2, X2));
      C = F.mul(F.mul(P.T, c.d2), T2);
      D = Z2 != nullptr ? F.mul(P.Z, *Z2) : P.Z;
      D = F.add(D, D);
      E = F.sub(B, A);
      Fv = F.sub(D, C);
      G = F.add(D, C);
      H = F.add(B, A);
   } else {
      // add-2008-hwcd
      A = F.mul(P.X, X2);
      B = F.mul(P.Y, Y2);
      C = F.mul(F.mul(P.T, c.d), T2);
      D = Z2 != nullptr ? F.mul(P.Z, *Z2) : P.Z;
      E = F.sub(F.sub(F.mul(F.add(P.X, P.Y), F.add(X2, Y2)), A), B);
      Fv = F.sub(D, C);
      G = F.add(D, C);
      H = c.kind == TECurve::EKind::One ? F.sub(B, A) : F.sub(B, F.mul(c.e, A));
   }
   return ExtPointTE{F.mul(E, Fv), F.mul(G, H), F.mul(E, H), F.mul(Fv, G)};
}

}  // namespace

ExtPointTE te_add(const TECurve& c, const ExtPointTE& P, const ExtPointTE& Q) {
   CTEC_COUNT_POINT(point_add);
   return add_core(c, P, Q.X, Q.Y, Q.T, &Q.Z);
}

ExtPointTE te_add_mixed(const TECurve& c, const ExtPointTE& P, const AffinePointTE& Q) {
   CTEC_COUNT_POINT(point_add_mixed);
   return add_core(c, P, Q.u, Q.v, Q.t, nullptr);
}

ExtPointTE te_dbl(const TECurve& c, const ExtPointTE& P) {
   CTEC_COUNT_POINT(point_dbl);
   // dbl-2008-hwcd
   const Field& F = c.F();
   const FieldElement A = F.sqr(P.X);
   const FieldElement B = F.sqr(P.Y);
   const FieldElement C = F.dbl(F.sqr(P.Z));
   FieldElement D;
   switch(c.kind) {
      case TECurve::EKind::One:
         D = A;
         break;
      case TECurve::EKind::MinusOne:
         D = F.neg(A);
         break;
      case TECurve::EKind::Other:
         D = F.mul(c.e, A);
         break;
   }
   const FieldElement E = F.sub(F.sub(F.sqr(F.add(P.X, P.Y)), A), B);
   const FieldElement G = F.add(D, B);
   const FieldElement Fv = F.sub(G, C);
   const FieldElement H = F.sub(D, B);
   return ExtPointTE{F.mul(E, Fv), F.mul(G, H), F.mul(E, H), F.mul(Fv, G)};
}

ExtPointTE te_neg(const TECurve& c, const ExtPointTE& P) {
   const Field& F = c.F();
   return ExtPointTE{F.neg(P.X), P.Y, F.neg(P.T), P.Z};
}

ExtPointTE te_cneg(const TECurve& c, const ExtPointTE& P, limb_t flag) {
   const Field& F = c.F();
   return ExtPointTE{F.select(flag, F.neg(P.X), P.X), P.Y, F.select(flag, F.neg(P.T), P.T), P.Z};
}

AffinePointTE te_cneg(const TECurve& c, const AffinePointTE& P, limb_t flag) {
   const Field& F = c.F();
   return AffinePointTE{F.select(flag, F.neg(P.u), P.u), P.v, F.select(flag, F.neg(P.t), P.t)};
}

ExtPointTE te_select(const TECurve& c, limb_t flag, const ExtPointTE& P, const ExtPointTE& Q) {
   const Field& F = c.F();
   return ExtPointTE{
      F.select(flag, P.X, Q.X), F.select(flag, P.Y, Q.Y), F.select(flag, P.T, Q.T), F.select(flag, P.Z, Q.Z)};
}

limb_t te_is_identity(const TECurve& c, const ExtPointTE& P) {
   const Field& F = c.F();
   return F.is_zero(P.X) & F.equal(P.Y, P.Z) & (F.is_zero(P.Z) ^ 1);
}

AffinePointTE te_normalize(const TECurve& c, const ExtPointTE& P) {
   const Field& F = c.F();
   const FieldElement zi = F.inv_or_zero(P.Z);
   return te_make_affine(c, F.mul(P.X, zi), F.mul(P.Y, zi));
}

bool te_on_curve(const TECurve& c, const ExtPointTE& P) {
   const Field& F = c.F();
   if(F.is_zero(P.Z) != 0) {
      return false;
   }
   const FieldElement x2 = F.sqr(P.X);
   const FieldElement y2 = F.sqr(P.Y);
   const FieldElement z2 = F.sqr(P.Z);
   const FieldElement lhs = F.mul(F.add(F.mul(c.e, x2), y2), z2);
   const FieldElement rhs = F.add(F.sqr(z2), F.mul(c.d, F.mul(x2, y2)));
   return F.equal(lhs, rhs) != 0 && F.equal(F.mul(P.T, P.Z), F.mul(P.X, P.Y)) != 0;
}

bool te_equal(const TECurve& c, const ExtPointTE& P, const ExtPointTE& Q) {
   const Field& F = c.F();
   return F.equal(F.mul(P.X, Q.Z), F.mul(Q.X, P.Z)) != 0 && F.equal(F.mul(P.Y, Q.Z), F.mul(Q.Y, P.Z)) != 0;
}

AffinePointTE te_table_lookup(const TECurve& c, std::span<const AffinePointTE> table, std::size_t index, limb_t negate) {
   const Field& F = c.F();
   AffinePointTE r{F.zero(), F.one(), F.zero()};
   for(std::size_t i = 0; i != table.size(); ++i) {
      CTEC_COUNT_POINT(table_touch);
      const limb_t hit = ct::is_zero_bit(static_cast<limb_t>(i ^ index));
      r.u = F.select(hit, table[i].u, r.u);
      r.v = F.select(hit, table[i].v, r.v);
      r.t = F.select(hit, table[i].t, r.t);
   }
   return te_cneg(c, r, negate);
}

ExtPointTE te_table_lookup(const TECurve& c, std::span<const ExtPointTE> table, std::size_t index, limb_t negate) {
   ExtPointTE r = te_identity(c);
   for(std::size_t i = 0; i != table.size(); ++i) {
      CTEC_COUNT_POINT(table_touch);
      const limb_t hit = ct::is_zero_bit(static_cast<limb_t>(i ^ index));
      r = te_select(c, hit, table[i], r);
   }
   return te_cneg(c, r, negate);
}

ExtPointTE map_w_to_te(const TECurve& c, const ProjPointW& P) {
   const Field& F = c.F();
   const FieldElement A = F.sub(P.X, F.mul(c.t, P.Z));
   const FieldElement sZ = F.mul(c.s, P.Z);
   const FieldElement B = F.sub(A, sZ);
   const FieldElement C = F.add(A, sZ);
   ExtPointTE R{F.mul(A, C), F.mul(B, P.Y), F.mul(A, B), F.mul(P.Y, C)};
   const limb_t is_id = F.is_zero(P.Z);
   if((F.is_zero(R.Z) & (is_id ^ 1)) != 0) {
      throw_error(ErrorCode::ExceptionalPoint, "point outside the domain of the Weierstrass-to-Edwards map");
   }
   return te_select(c, is_id, te_identity(c), R);
}

ExtPointTE map_w_to_te(const TECurve& c, const WCurve& w, const AffinePoint& P) {
   return map_w_to_te(c, w_lift(w, P));
}

ProjPointW map_te_to_w(const TECurve& c, const ExtPointTE& P) {
   const Field& F = c.F();
   const FieldElement zpy = F.mul(c.s, F.add(P.Z, P.Y));
   const FieldElement zmy = F.sub(P.Z, P.Y);
   ProjPointW R{F.mul(F.add(zpy, F.mul(c.t, zmy)), P.X), F.mul(zpy, P.Z), F.mul(zmy, P.X)};
   const limb_t is_id = F.is_zero(P.X) & F.equal(P.Y, P.Z);
   if((F.is_zero(R.Z) & (is_id ^ 1)) != 0) {
      throw_error(ErrorCode::ExceptionalPoint, "point outside the domain of the Edwards-to-Weierstrass map");
   }
   // The identity comes out as (0 : 2sZ : 0); normalize it to (0:1:0).
   return ProjPointW{R.X, F.select(is_id, F.one(), R.Y), R.Z};
}

}  // namespace ctec
