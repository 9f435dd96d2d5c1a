#include <ctec/curve.hpp>

#include <ctec/error.hpp>
#include <ctec/scalarmul.hpp>

#include <map>
#include <mutex>

namespace ctec {

std::string_view to_string(Model m) {
   return m == Model::TwistedEdwards ? "twisted-edwards" : "weierstrass";
}

Curve::Curve(const CurveDescriptor& desc, CurveOptions opts) :
      m_desc(desc),
      m_opts(opts),
      m_field(desc.p),
      m_scalars(desc.q),
      m_w(m_field, desc.coefficient_class, desc.a, desc.b),
      m_model(desc.edwards ? Model::TwistedEdwards : Model::Weierstrass) {
   if(opts.window < 2 || opts.window > 7) {
      throw_error(ErrorCode::InvalidArgument, "window must be in [2, 7]");
   }
   if(desc.edwards) {
      m_te.emplace(m_field, desc);
   }
   m_g = AffinePoint{fe(desc.gx), fe(desc.gy)};
   if(!w_on_curve(m_w, m_g)) {
      throw_error(ErrorCode::ValidationError, desc.name + ": generator not on curve");
   }
}

Curve::~Curve() = default;

std::shared_ptr<const Curve> Curve::create(const CurveDescriptor& desc, CurveOptions opts) {
   std::shared_ptr<Curve> c(new Curve(desc, opts));
   c->m_comb = std::make_unique<const CombTables>(build_comb_tables(*c, opts.window, opts.l1_budget));
   return c;
}

FieldElement Curve::fe(std::span<const std::uint8_t> be) const {
   LimbArray v{};
   if(!limbs::from_bytes_be(v, be) || limbs::compare(v, m_field.modulus(), kMaxLimbs) >= 0) {
      throw_error(ErrorCode::OutOfRange, "value not below p");
   }
   return m_field.from_canonical(v);
}

std::shared_ptr<const Curve> curve_by_name(std::string_view name) {
   static std::mutex mu;
   static std::map<std::string, std::shared_ptr<const Curve>, std::less<>> cache;
   const CurveDescriptor& desc = bundled_database().get(name);
   std::lock_guard<std::mutex> lock(mu);
   auto it = cache.find(name);
   if(it == cache.end()) {
      it = cache.emplace(desc.name, Curve::create(desc)).first;
   }
   return it->second;
}

}  // namespace ctec
