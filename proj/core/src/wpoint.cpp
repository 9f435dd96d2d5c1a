#include <ctec/wpoint.hpp>

namespace ctec {

namespace {

FieldElement fe_from(const Field& F, std::span<const std::uint8_t> be) {
   LimbArray v{};
   limbs::from_bytes_be(v, be);
   return F.from_canonical(v);
}

// Complete formulas of Renes, Costello and Batina (2016), Algorithms 1-9,
// in their original operation order.

ProjPointW add_general(const WCurve& c, const ProjPointW& P, const ProjPointW& Q) {
   const Field& F = c.F();
   const FieldElement &X1 = P.X, &Y1 = P.Y, &Z1 = P.Z;
   const FieldElement &X2 = Q.X, &Y2 = Q.Y, &Z2 = Q.Z;
   FieldElement t0, t1, t2, t3, t4, t5, X3, Y3, Z3;
   t0 = F.mul(X1, X2);
   t1 = F.mul(Y1, Y2);
   t2 = F.mul(Z1, Z2);
   t3 = F.add(X1, Y1);
   t4 = F.add(X2, Y2);
   t3 = F.mul(t3, t4);
   t4 = F.add(t0, t1);
   t3 = F.sub(t3, t4);
   t4 = F.add(X1, Z1);
   t5 = F.add(X2, Z2);
   t4 = F.mul(t4, t5);
   t5 = F.add(t0, t2);
   t4 = F.sub(t4, t5);
   t5 = F.add(Y1, Z1);
   X3 = F.add(Y2, Z2);
   t5 = F.mul(t5, X3);
   X3 = F.add(t1, t2);
   t5 = F.sub(t5, X3);
   Z3 = F.mul(c.a, t4);
   X3 = F.mul(c.b3, t2);
   Z3 = F.add(X3, Z3);
   X3 = F.sub(t1, Z3);
   Z3 = F.add(t1, Z3);
   Y3 = F.mul(X3, Z3);
   t1 = F.add(t0, t0);
   t1 = F.add(t1, t0);
   t2 = F.mul(c.a, t2);
   t4 = F.mul(c.b3, t4);
   t1 = F.add(t1, t2);
   t2 = F.sub(t0, t2);
   t2 = F.mul(c.a, t2);
   t4 = F.add(t4, t2);
   t0 = F.mul(t1, t4);
   Y3 = F.add(Y3, t0);
   t0 = F.mul(t5, t4);
   X3 = F.mul(t3, X3);
   X3 = F.sub(X3, t0);
   t0 = F.mul(t3, t1);
   Z3 = F.mul(t5, Z3);
   Z3 = F.add(Z3, t0);
   return ProjPointW{X3, Y3, Z3};
}

ProjPointW mixed_general(const WCurve& c, const ProjPointW& P, const AffinePoint& Q) {
   const Field& F = c.F();
   const FieldElement &X1 = P.X, &Y1 = P.Y, &Z1 = P.Z;
   const FieldElement &X2 = Q.x, &Y2 = Q.y;
   FieldElement t0, t1, t2, t3, t4, t5, X3, Y3, Z3;
   t0 = F.mul(X1, X2);
   t1 = F.mul(Y1, Y2);
   t3 = F.add(X2, Y2);
   t4 = F.add(X1, Y1);
   t3 = F.mul(t3, t4);
   t4 = F.add(t0, t1);
   t3 = F.sub(t3, t4);
   t4 = F.mul(X2, Z1);
   t4 = F.add(t4, X1);
   t5 = F.mul(Y2, Z1);
   t5 = F.add(t5, Y1);
   Z3 = F.mul(c.a, t4);
   X3 = F.mul(c.b3, Z1);
   Z3 = F.add(X3, Z3);
   X3 = F.sub(t1, Z3);
   Z3 = F.add(t1, Z3);
   Y3 = F.mul(X3, Z3);
   t1 = F.add(t0, t0);
   t1 = F.add(t1, t0);
   t2 = F.mul(c.a, Z1);
   t4 = F.mul(c.b3, t4);
   t1 = F.add(t1, t2);
   t2 = F.sub(t0, t2);
   t2 = F.mul(c.a, t2);
   t4 = F.add(t4, t2);
   t0 = F.mul(t1, t4);
   Y3 = F.add(Y3, t0);
   t0 = F.mul(t5, t4);
   X3 = F.mul(t3, X3);
   X3 = F.sub(X3, t0);
   t0 = F.mul(t3, t1);
   Z3 = F.mul(t5, Z3);
   Z3 = F.add(Z3, t0);
   return ProjPointW{X3, Y3, Z3};
}

ProjPointW dbl_general(const WCurve& c, const ProjPointW& P) {
   const Field& F = c.F();
   const FieldElement &X = P.X, &Y = P.Y, &Z = P.Z;
   FieldElement t0, t1, t2, t3, X3, Y3, Z3;
   t0 = F.sqr(X);
   t1 = F.sqr(Y);
   t2 = F.sqr(Z);
   t3 = F.mul(X, Y);
   t3 = F.add(t3, t3);
   Z3 = F.mul(X, Z);
   Z3 = F.add(Z3, Z3);
   X3 = F.mul(c.a, Z3);
   Y3 = F.mul(c.b3, t2);
   Y3 = F.add(X3, Y3);
   X3 = F.sub(t1, Y3);
   Y3 = F.add(t1, Y3);
   Y3 = F.mul(X3, Y3);
   X3 = F.mul(t3, X3);
   Z3 = F.mul(c.b3, Z3);
   t2 = F.mul(c.a, t2);
   t3 = F.sub(t0, t2);
   t3 = F.mul(c.a, t3);
   t3 = F.add(t3, Z3);
   Z3 = F.add(t0, t0);
   t0 = F.add(Z3, t0);
   t0 = F.add(t0, t2);
   t0 = F.mul(t0, t3);
   Y3 = F.add(Y3, t0);
   t2 = F.mul(Y, Z);
   t2 = F.add(t2, t2);
   t0 = F.mul(t2, t3);
   X3 = F.sub(X3, t0);
   Z3 = F.mul(t2, t1);
   Z3 = F.add(Z3, Z3);
   Z3 = F.add(Z3, Z3);
   return ProjPointW{X3, Y3, Z3};
}

ProjPointW add_minus3(const WCurve& c, const ProjPointW& P, const ProjPointW& Q) {
   const Field& F = c.F();
   const FieldElement &X1 = P.X, &Y1 = P.Y, &Z1 = P.Z;
   const FieldElement &X2 = Q.X, &Y2 = Q.Y, &Z2 = Q.Z;
   FieldElement t0, t1, t2, t3, t4, X3, Y3, Z3;
   t0 = F.mul(X1, X2);
   t1 = F.mul(Y1, Y2);
   t2 = F.mul(Z1, Z2);
   t3 = F.add(X1, Y1);
   t4 = F.add(X2, Y2);
   t3 = F.mul(t3, t4);
   t4 = F.add(t0, t1);
   t3 = F.sub(t3, t4);
   t4 = F.add(Y1, Z1);
   X3 = F.add(Y2, Z2);
   t4 = F.mul(t4, X3);
   X3 = F.add(t1, t2);
   t4 = F.sub(t4, X3);
   X3 = F.add(X1, Z1);
   Y3 = F.add(X2, Z2);
   X3 = F.mul(X3, Y3);
   Y3 = F.add(t0, t2);
   Y3 = F.sub(X3, Y3);
   Z3 = F.mul(c.b, t2);
   X3 = F.sub(Y3, Z3);
   Z3 = F.add(X3, X3);
   X3 = F.add(X3, Z3);
   Z3 = F.sub(t1, X3);
   X3 = F.add(t1, X3);
   Y3 = F.mul(c.b, Y3);
   t1 = F.add(t2, t2);
   t2 = F.add(t1, t2);
   Y3 = F.sub(Y3, t2);
   Y3 = F.sub(Y3, t0);
   t1 = F.add(Y3, Y3);
   Y3 = F.add(t1, Y3);
   t1 = F.add(t0, t0);
   t0 = F.add(t1, t0);
   t0 = F.sub(t0, t2);
   t1 = F.mul(t4, Y3);
   t2 = F.mul(t0, Y3);
   Y3 = F.mul(X3, Z3);
   Y3 = F.add(Y3, t2);
   X3 = F.mul(t3, X3);
   X3 = F.sub(X3, t1);
   Z3 = F.mul(t4, Z3);
   t1 = F.mul(t3, t0);
   Z3 = F.add(Z3, t1);
   return ProjPointW{X3, Y3, Z3};
}

ProjPointW mixed_minus3(const WCurve& c, const ProjPointW& P, const AffinePoint& Q) {
   const Field& F = c.F();
   const FieldElement &X1 = P.X, &Y1 = P.Y, &Z1 = P.Z;
   const FieldElement &X2 = Q.x, &Y2 = Q.y;
   FieldElement t0, t1, t2, t3, t4, X3, Y3, Z3;
   t0 = F.mul(X1, X2);
   t1 = F.mul(Y1, Y2);
   t3 = F.add(X2, Y2);
   t4 = F.add(X1, Y1);
   t3 = F.mul(t3, t4);
   t4 = F.add(t0, t1);
   t3 = F.sub(t3, t4);
   t4 = F.mul(Y2, Z1);
   t4 = F.add(t4, Y1);
   Y3 = F.mul(X2, Z1);
   Y3 = F.add(Y3, X1);
   Z3 = F.mul(c.b, Z1);
   X3 = F.sub(Y3, Z3);
   Z3 = F.add(X3, X3);
   X3 = F.add(X3, Z3);
   Z3 = F.sub(t1, X3);
   X3 = F.add(t1, X3);
   Y3 = F.mul(c.b, Y3);
   t1 = F.add(Z1, Z1);
   t2 = F.add(t1, Z1);
   Y3 = F.sub(Y3, t2);
   Y3 = F.sub(Y3, t0);
   t1 = F.add(Y3, Y3);
   Y3 = F.add(t1, Y3);
   t1 = F.add(t0, t0);
   t0 = F.add(t1, t0);
   t0 = F.sub(t0, t2);
   t1 = F.mul(t4, Y3);
   t2 = F.mul(t0, Y3);
   Y3 = F.mul(X3, Z3);
   Y3 = F.add(Y3, t2);
   X3 = F.mul(t3, X3);
   X3 = F.sub(X3, t1);
   Z3 = F.mul(t4, Z3);
   t1 = F.mul(t3, t0);
   Z3 = F.add(Z3, t1);
   return ProjPointW{X3, Y3, Z3};
}

ProjPointW dbl_minus3(const WCurve& c, const ProjPointW& P) {
   const Field& F = c.F();
   const FieldElement &X = P.X, &Y = P.Y, &Z = P.Z;
   FieldElement t0, t1, t2, t3, X3, Y3, Z3;
   t0 = F.sqr(X);
   t1 = F.sqr(Y);
   t2 = F.sqr(Z);
   t3 = F.mul(X, Y);
   t3 = F.add(t3, t3);
   Z3 = F.mul(X, Z);
   Z3 = F.add(Z3, Z3);
   Y3 = F.mul(c.b, t2);
   Y3 = F.sub(Y3, Z3);
   X3 = F.add(Y3, Y3);
   Y3 = F.add(X3, Y3);
   X3 = F.sub(t1, Y3);
   Y3 = F.add(t1, Y3);
   Y3 = F.mul(X3, Y3);
   X3 = F.mul(X3, t3);
   t3 = F.add(t2, t2);
   t2 = F.add(t2, t3);
   Z3 = F.mul(c.b, Z3);
   Z3 = F.sub(Z3, t2);
   Z3 = F.sub(Z3, t0);
   t3 = F.add(Z3, Z3);
   Z3 = F.add(Z3, t3);
   t3 = F.add(t0, t0);
   t0 = F.add(t3, t0);
   t0 = F.sub(t0, t2);
   t0 = F.mul(t0, Z3);
   Y3 = F.add(Y3, t0);
   t0 = F.mul(Y, Z);
   t0 = F.add(t0, t0);
   Z3 = F.mul(t0, Z3);
   X3 = F.sub(X3, Z3);
   Z3 = F.mul(t0, t1);
   Z3 = F.add(Z3, Z3);
   Z3 = F.add(Z3, Z3);
   return ProjPointW{X3, Y3, Z3};
}

ProjPointW add_zero(const WCurve& c, const ProjPointW& P, const ProjPointW& Q) {
   const Field& F = c.F();
   const FieldElement &X1 = P.X, &Y1 = P.Y, &Z1 = P.Z;
   const FieldElement &X2 = Q.X, &Y2 = Q.Y, &Z2 = Q.Z;
   FieldElement t0, t1, t2, t3, t4, X3, Y3, Z3;
   t0 = F.mul(X1, X2);
   t1 = F.mul(Y1, Y2);
   t2 = F.mul(Z1, Z2);
   t3 = F.add(X1, Y1);
   t4 = F.add(X2, Y2);
   t3 = F.mul(t3, t4);
   t4 = F.add(t0, t1);
   t3 = F.sub(t3, t4);
   t4 = F.add(Y1, Z1);
   X3 = F.add(Y2, Z2);
   t4 = F.mul(t4, X3);
   X3 = F.add(t1, t2);
   t4 = F.sub(t4, X3);
   X3 = F.add(X1, Z1);
   Y3 = F.add(X2, Z2);
   X3 = F.mul(X3, Y3);
   Y3 = F.add(t0, t2);
   Y3 = F.sub(X3, Y3);
   X3 = F.add(t0, t0);
   t0 = F.add(X3, t0);
   t2 = F.mul(c.b3, t2);
   Z3 = F.add(t1, t2);
   t1 = F.sub(t1, t2);
   Y3 = F.mul(c.b3, Y3);
   X3 = F.mul(t4, Y3);
   t2 = F.mul(t3, t1);
   X3 = F.sub(t2, X3);
   Y3 = F.mul(Y3, t0);
   t1 = F.mul(t1, Z3);
   Y3 = F.add(t1, Y3);
   t0 = F.mul(t0, t3);
   Z3 = F.mul(Z3, t4);
   Z3 = F.add(Z3, t0);
   return ProjPointW{X3, Y3, Z3};
}

ProjPointW mixed_zero(const WCurve& c, const ProjPointW& P, const AffinePoint& Q) {
   const Field& F = c.F();
   const FieldElement &X1 = P.X, &Y1 = P.Y, &Z1 = P.Z;
   const FieldElement &X2 = Q.x, &Y2 = Q.y;
   FieldElement t0, t1, t2, t3, t4, X3, Y3, Z3;
   t0 = F.mul(X1, X2);
   t1 = F.mul(Y1, Y2);
   t3 = F.add(X2, Y2);
   t4 = F.add(X1, Y1);
   t3 = F.mul(t3, t4);
   t4 = F.add(t0, t1);
   t3 = F.sub(t3, t4);
   t4 = F.mul(Y2, Z1);
   t4 = F.add(t4, Y1);
   Y3 = F.mul(X2, Z1);
   Y3 = F.add(Y3, X1);
   X3 = F.add(t0, t0);
   t0 = F.add(X3, t0);
   t2 = F.mul(c.b3, Z1);
   Z3 = F.add(t1, t2);
   t1 = F.sub(t1, t2);
   Y3 = F.mul(c.b3, Y3);
   X3 = F.mul(t4, Y3);
   t2 = F.mul(t3, t1);
   X3 = F.sub(t2, X3);
   Y3 = F.mul(Y3, t0);
   t1 = F.mul(t1, Z3);
   Y3 = F.add(t1, Y3);
   t0 = F.mul(t0, t3);
   Z3 = F.mul(Z3, t4);
   Z3 = F.add(Z3, t0);
   return ProjPointW{X3, Y3, Z3};
}

ProjPointW dbl_zero(const WCurve& c, const ProjPointW& P) {
   const Field& F = c.F();
   const FieldElement &X = P.X, &Y = P.Y, &Z = P.Z;
   FieldElement t0, t1, t2, X3, Y3, Z3;
   t0 = F.sqr(Y);
   Z3 = F.add(t0, t0);
   Z3 = F.add(Z3, Z3);
   Z3 = F.add(Z3, Z3);
   t1 = F.mul(Y, Z);
   t2 = F.sqr(Z);
   t2 = F.mul(c.b3, t2);
   X3 = F.mul(t2, Z3);
   Y3 = F.add(t0, t2);
   Z3 = F.mul(t1, Z3);
   t1 = F.add(t2, t2);
   t2 = F.add(t1, t2);
   t0 = F.sub(t0, t2);
   Y3 = F.mul(t0, Y3);
   Y3 = F.add(X3, Y3);
   t1 = F.mul(X, Y);
   X3 = F.mul(t0, t1);
   X3 = F.add(X3, X3);
   return ProjPointW{X3, Y3, Z3};
}

}  // namespace

WCurve::WCurve(const Field& f, CoefficientClass c, std::span<const std::uint8_t> a_be, std::span<const std::uint8_t> b_be) :
      field(&f), cls(c), a(fe_from(f, a_be)), b(fe_from(f, b_be)) {
   b3 = f.add(f.add(b, b), b);
}

ProjPointW w_identity(const WCurve& c) {
   return ProjPointW{c.F().zero(), c.F().one(), c.F().zero()};
}

ProjPointW w_lift(const WCurve& c, const AffinePoint& P) {
   const Field& F = c.F();
   const limb_t is_id = F.is_zero(P.x) & F.is_zero(P.y);
   return ProjPointW{P.x, F.select(is_id, F.one(), P.y), F.select(is_id, F.zero(), F.one())};
}

ProjPointW w_add(const WCurve& c, const ProjPointW& P, const ProjPointW& Q) {
   CTEC_COUNT_POINT(point_add);
   switch(c.cls) {
      case CoefficientClass::AMinus3:
         return add_minus3(c, P, Q);
      case CoefficientClass::AZero:
         return add_zero(c, P, Q);
      case CoefficientClass::GeneralA:
         break;
   }
   return add_general(c, P, Q);
}

ProjPointW w_add_mixed(const WCurve& c, const ProjPointW& P, const AffinePoint& Q) {
   CTEC_COUNT_POINT(point_add_mixed);
   ProjPointW R;
   switch(c.cls) {
      case CoefficientClass::AMinus3:
         R = mixed_minus3(c, P, Q);
         break;
      case CoefficientClass::AZero:
         R = mixed_zero(c, P, Q);
         break;
      case CoefficientClass::GeneralA:
         R = mixed_general(c, P, Q);
         break;
   }
   // (0, 0) is not on the curve, so the formula output is garbage for it;
   // replace it by P without branching.
   const Field& F = c.F();
   const limb_t q_is_id = F.is_zero(Q.x) & F.is_zero(Q.y);
   return w_select(c, q_is_id, P, R);
}

ProjPointW w_dbl(const WCurve& c, const ProjPointW& P) {
   CTEC_COUNT_POINT(point_dbl);
   switch(c.cls) {
      case CoefficientClass::AMinus3:
         return dbl_minus3(c, P);
      case CoefficientClass::AZero:
         return dbl_zero(c, P);
      case CoefficientClass::GeneralA:
         break;
   }
   return dbl_general(c, P);
}

ProjPointW w_neg(const WCurve& c, const ProjPointW& P) {
   return ProjPointW{P.X, c.F().neg(P.Y), P.Z};
}

AffinePoint w_neg(const WCurve& c, const AffinePoint& P) {
   return AffinePoint{P.x, c.F().neg(P.y)};
}

ProjPointW w_cneg(const WCurve& c, const ProjPointW& P, limb_t flag) {
   const Field& F = c.F();
   return ProjPointW{P.X, F.select(flag, F.neg(P.Y), P.Y), P.Z};
}

AffinePoint w_cneg(const WCurve& c, const AffinePoint& P, limb_t flag) {
   const Field& F = c.F();
   return AffinePoint{P.x, F.select(flag, F.neg(P.y), P.y)};
}

ProjPointW w_select(const WCurve& c, limb_t flag, const ProjPointW& P, const ProjPointW& Q) {
   const Field& F = c.F();
   return ProjPointW{F.select(flag, P.X, Q.X), F.select(flag, P.Y, Q.Y), F.select(flag, P.Z, Q.Z)};
}

limb_t w_is_identity(const WCurve& c, const ProjPointW& P) {
   return c.F().is_zero(P.Z);
}

AffinePoint w_normalize(const WCurve& c, const ProjPointW& P) {
   const Field& F = c.F();
   // inv_or_zero maps Z = 0 to 0, which yields (0, 0) for the identity.
   const FieldElement zi = F.inv_or_zero(P.Z);
   return AffinePoint{F.mul(P.X, zi), F.mul(P.Y, zi)};
}

bool w_on_curve(const WCurve& c, const ProjPointW& P) {
   const Field& F = c.F();
   if(F.is_zero(P.X) & F.is_zero(P.Y) & F.is_zero(P.Z)) {
      return false;
   }
   const FieldElement z2 = F.sqr(P.Z);
   const FieldElement lhs = F.mul(P.Z, F.sqr(P.Y));
   FieldElement rhs = F.mul(F.sqr(P.X), P.X);
   rhs = F.add(rhs, F.mul(c.a, F.mul(P.X, z2)));
   rhs = F.add(rhs, F.mul(c.b, F.mul(z2, P.Z)));
   return F.equal(lhs, rhs) != 0;
}

bool w_on_curve(const WCurve& c, const AffinePoint& P) {
   const Field& F = c.F();
   if(F.is_zero(P.x) & F.is_zero(P.y)) {
      return true;
   }
   const FieldElement lhs = F.sqr(P.y);
   FieldElement rhs = F.mul(F.sqr(P.x), P.x);
   rhs = F.add(rhs, F.mul(c.a, P.x));
   rhs = F.add(rhs, c.b);
   return F.equal(lhs, rhs) != 0;
}

bool w_equal(const WCurve& c, const ProjPointW& P, const ProjPointW& Q) {
   const Field& F = c.F();
   const bool pid = F.is_zero(P.Z) != 0;
   const bool qid = F.is_zero(Q.Z) != 0;
   if(pid || qid) {
      return pid == qid;
   }
   return F.equal(F.mul(P.X, Q.Z), F.mul(Q.X, P.Z)) != 0 && F.equal(F.mul(P.Y, Q.Z), F.mul(Q.Y, P.Z)) != 0;
}

AffinePoint w_table_lookup(const WCurve& c, std::span<const AffinePoint> table, std::size_t index, limb_t negate) {
   const Field& F = c.F();
   AffinePoint r{F.zero(), F.zero()};
   for(std::size_t i = 0; i != table.size(); ++i) {
      CTEC_COUNT_POINT(table_touch);
      const limb_t hit = ct::is_zero_bit(static_cast<limb_t>(i ^ index));
      r.x = F.select(hit, table[i].x, r.x);
      r.y = F.select(hit, table[i].y, r.y);
   }
   return w_cneg(c, r, negate);
}

ProjPointW w_table_lookup(const WCurve& c, std::span<const ProjPointW> table, std::size_t index, limb_t negate) {
   ProjPointW r = w_identity(c);
   for(std::size_t i = 0; i != table.size(); ++i) {
      CTEC_COUNT_POINT(table_touch);
      const limb_t hit = ct::is_zero_bit(static_cast<limb_t>(i ^ index));
      r = w_select(c, hit, table[i], r);
   }
   return w_cneg(c, r, negate);
}

}  // namespace ctec
