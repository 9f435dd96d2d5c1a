#include <ctec/curves.hpp>

#include <ctec/error.hpp>
#include <ctec/hex.hpp>
#include <ctec/oracle.hpp>

#include <nlohmann/json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace ctec {

std::string_view to_string(CoefficientClass c) {
   switch(c) {
      case CoefficientClass::GeneralA:
         return "general_a";
      case CoefficientClass::AMinus3:
         return "a_minus3";
      case CoefficientClass::AZero:
         return "a_zero";
   }
   return "general_a";
}

namespace {

using nlohmann::json;
using oracle::to_mpz;

[[noreturn]] void invalid(const CurveDescriptor& desc, std::string_view what) {
   throw_error(ErrorCode::ValidationError, desc.name + ": " + std::string(what));
}

Bytes hex_field(const json& obj, const char* key, const std::string& curve) {
   if(!obj.contains(key) || !obj.at(key).is_string()) {
      throw_error(ErrorCode::ParseError, curve + ": missing hex field '" + key + "'");
   }
   const std::string s = obj.at(key).get<std::string>();
   if(s.size() < 3 || s[0] != '0' || s[1] != 'x') {
      throw_error(ErrorCode::ParseError, curve + ": field '" + key + "' must be 0x-prefixed hex");
   }
   return strip_leading_zeros(from_hex(s));
}

unsigned int_field(const json& obj, const char* key, const std::string& curve) {
   if(!obj.contains(key)) {
      throw_error(ErrorCode::ParseError, curve + ": missing field '" + key + "'");
   }
   const json& v = obj.at(key);
   if(v.is_number_unsigned()) {
      return v.get<unsigned>();
   }
   if(v.is_string()) {
      return static_cast<unsigned>(oracle::to_mpz(hex_field(obj, key, curve)).get_ui());
   }
   throw_error(ErrorCode::ParseError, curve + ": field '" + key + "' must be an integer");
}

CoefficientClass parse_class(const std::string& s, const std::string& curve) {
   if(s == "general_a") {
      return CoefficientClass::GeneralA;
   }
   if(s == "a_minus3") {
      return CoefficientClass::AMinus3;
   }
   if(s == "a_zero") {
      return CoefficientClass::AZero;
   }
   throw_error(ErrorCode::ParseError, curve + ": unknown coefficient_class '" + s + "'");
}

std::string hex_out(const Bytes& b) {
   const std::string h = to_hex(b);
   return "0x" + (h.empty() ? std::string("0") : h);
}

}  // namespace

EdwardsConstants derive_edwards(const CurveDescriptor& desc) {
   if(!desc.edwards) {
      throw_error(ErrorCode::InvalidArgument, desc.name + ": no Edwards parameters");
   }
   if(desc.h % 4 != 0) {
      throw_error(ErrorCode::InvalidArgument, desc.name + ": Edwards form needs 4 | h");
   }
   const mpz_class p = to_mpz(desc.p);
   const mpz_class e = to_mpz(desc.edwards->e) % p;
   const mpz_class d = to_mpz(desc.edwards->d) % p;
   if(e == d) {
      throw_error(ErrorCode::InvalidArgument, desc.name + ": degenerate Edwards curve (e = d)");
   }
   if(p % 2 == 0 || p % 3 == 0) {
      throw_error(ErrorCode::InvalidArgument, desc.name + ": 6 not invertible mod p");
   }
   const oracle::Curve c(desc);
   const mpz_class& s = c.s();
   const mpz_class& t = c.t();
   const auto md = [&](const mpz_class& v) {
      mpz_class r;
      mpz_mod(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
      return r;
   };
   const mpz_class a = md(s * s - 3 * t * t);
   const mpz_class b = md(2 * t * t * t - t * s * s);
   if(a != md(to_mpz(desc.a)) || b != md(to_mpz(desc.b))) {
      throw_error(ErrorCode::InconsistentParameters,
                  desc.name + ": (e, d) do not give the stored Weierstrass coefficients");
   }
   return EdwardsConstants{oracle::to_bytes(s), oracle::to_bytes(t)};
}

bool validate_twist(const CurveDescriptor& desc) {
   if(!desc.twist) {
      return false;
   }
   const mpz_class lhs = desc.h * to_mpz(desc.q) + desc.twist->h_t * to_mpz(desc.twist->q_t);
   return lhs == 2 * (to_mpz(desc.p) + 1);
}

void validate_curve(const CurveDescriptor& desc) {
   const mpz_class p = to_mpz(desc.p);
   const mpz_class q = to_mpz(desc.q);
   if(p <= 3 || p % 2 == 0 || !oracle::is_probable_prime(p)) {
      invalid(desc, "p is not an odd prime > 3");
   }
   if(mpz_sizeinbase(p.get_mpz_t(), 2) > kMaxBits - 16) {
      invalid(desc, "p wider than supported");
   }
   if(!oracle::is_probable_prime(q)) {
      invalid(desc, "q is not prime");
   }
   if(desc.h != 1 && desc.h != 4 && desc.h != 8) {
      invalid(desc, "cofactor not in {1, 4, 8}");
   }
   const mpz_class a = to_mpz(desc.a), b = to_mpz(desc.b);
   if(a >= p || b >= p) {
      invalid(desc, "coefficient not reduced mod p");
   }
   if(mpz_class(4 * a * a * a + 27 * b * b) % p == 0) {
      invalid(desc, "singular curve");
   }
   switch(desc.coefficient_class) {
      case CoefficientClass::AMinus3:
         if(a != p - 3) {
            invalid(desc, "coefficient_class a_minus3 but a != -3");
         }
         break;
      case CoefficientClass::AZero:
         if(a != 0) {
            invalid(desc, "coefficient_class a_zero but a != 0");
         }
         break;
      case CoefficientClass::GeneralA:
         break;
   }
   // Hasse bound: |h*q - (p+1)| <= 2 sqrt(p).
   const mpz_class trace = desc.h * q - (p + 1);
   mpz_class root;
   mpz_sqrt(root.get_mpz_t(), p.get_mpz_t());
   if(abs(trace) > 2 * (root + 1)) {
      invalid(desc, "h*q outside the Hasse interval");
   }

   const oracle::Curve c(desc);
   const oracle::Point g = c.generator();
   if(!c.on_curve(g)) {
      invalid(desc, "on-curve: generator does not satisfy the curve equation");
   }
   if(!c.mul(q, g).infinity) {
      invalid(desc, "order: [q]g is not the identity");
   }

   if(desc.edwards) {
      try {
         derive_edwards(desc);
      } catch(const Error& err) {
         invalid(desc, std::string("edwards: ") + err.what());
      }
      const oracle::EdPoint eg{to_mpz(desc.edwards->ugen), to_mpz(desc.edwards->vgen)};
      if(!c.on_edwards(eg)) {
         invalid(desc, "edwards: (ugen, vgen) not on the Edwards curve");
      }
      if(!(c.to_edwards(g) == eg)) {
         invalid(desc, "edwards: (ugen, vgen) is not the image of the generator");
      }
   }
   if(desc.twist && !validate_twist(desc)) {
      invalid(desc, "twist: h*q + h_t*q_t != 2(p+1)");
   }
   if(desc.full_order) {
      const oracle::Point f = oracle::Point::affine(to_mpz(desc.full_order->x), to_mpz(desc.full_order->y));
      if(!c.on_curve(f)) {
         invalid(desc, "full_order: point not on curve");
      }
      const oracle::Point fq = c.mul(q, f);
      if(fq.infinity || !c.mul(desc.h, fq).infinity) {
         invalid(desc, "full_order: point does not generate the h-torsion part");
      }
      // Order exactly h*q: [h/2 * q]F must not vanish.
      if(desc.h > 1 && c.mul(desc.h / 2, fq).infinity) {
         invalid(desc, "full_order: point order is a proper divisor of h*q");
      }
   }
}

CurveDatabase::CurveDatabase(std::vector<CurveDescriptor> curves) : m_curves(std::move(curves)) {
   std::set<std::string> names;
   for(const auto& c : m_curves) {
      if(!names.insert(c.name).second) {
         throw_error(ErrorCode::ValidationError, "duplicate curve name " + c.name);
      }
   }
}

const CurveDescriptor* CurveDatabase::find(std::string_view name) const {
   for(const auto& c : m_curves) {
      if(c.name == name) {
         return &c;
      }
   }
   return nullptr;
}

const CurveDescriptor& CurveDatabase::get(std::string_view name) const {
   if(const auto* c = find(name)) {
      return *c;
   }
   throw_error(ErrorCode::NotFound, "unknown curve " + std::string(name));
}

std::vector<CurveDescriptor> parse_curves_json(std::string_view text) {
   json doc;
   try {
      doc = json::parse(text);
   } catch(const json::parse_error& e) {
      throw_error(ErrorCode::ParseError, std::string("curve database: ") + e.what());
   }
   if(!doc.is_object() || !doc.contains("curves") || !doc.at("curves").is_array()) {
      throw_error(ErrorCode::ParseError, "curve database: expected {\"curves\": [...]}");
   }
   std::vector<CurveDescriptor> out;
   for(const json& obj : doc.at("curves")) {
      if(!obj.is_object() || !obj.contains("name") || !obj.at("name").is_string()) {
         throw_error(ErrorCode::ParseError, "curve database: entry without a name");
      }
      CurveDescriptor d;
      d.name = obj.at("name").get<std::string>();
      if(obj.contains("oid")) {
         d.oid = obj.at("oid").get<std::string>();
      }
      d.p = hex_field(obj, "p", d.name);
      d.a = hex_field(obj, "a", d.name);
      d.b = hex_field(obj, "b", d.name);
      d.q = hex_field(obj, "q", d.name);
      d.h = int_field(obj, "h", d.name);
      d.gx = hex_field(obj, "gx", d.name);
      d.gy = hex_field(obj, "gy", d.name);
      if(!obj.contains("coefficient_class")) {
         throw_error(ErrorCode::ParseError, d.name + ": missing coefficient_class");
      }
      d.coefficient_class = parse_class(obj.at("coefficient_class").get<std::string>(), d.name);
      if(obj.contains("edwards")) {
         const json& e = obj.at("edwards");
         d.edwards = EdwardsData{hex_field(e, "e", d.name),
                                 hex_field(e, "d", d.name),
                                 hex_field(e, "ugen", d.name),
                                 hex_field(e, "vgen", d.name)};
      }
      if(obj.contains("twist")) {
         const json& t = obj.at("twist");
         d.twist = TwistData{int_field(t, "h_t", d.name), hex_field(t, "q_t", d.name)};
      }
      if(obj.contains("full_order")) {
         const json& f = obj.at("full_order");
         d.full_order = AffineCoords{hex_field(f, "x", d.name), hex_field(f, "y", d.name)};
      }
      out.push_back(std::move(d));
   }
   return out;
}

std::string to_json(const std::vector<CurveDescriptor>& curves) {
   json arr = json::array();
   for(const auto& d : curves) {
      json o;
      o["name"] = d.name;
      if(d.oid) {
         o["oid"] = *d.oid;
      }
      o["p"] = hex_out(d.p);
      o["a"] = hex_out(d.a);
      o["b"] = hex_out(d.b);
      o["q"] = hex_out(d.q);
      o["h"] = d.h;
      o["gx"] = hex_out(d.gx);
      o["gy"] = hex_out(d.gy);
      o["coefficient_class"] = std::string(to_string(d.coefficient_class));
      if(d.edwards) {
         o["edwards"] = {{"e", hex_out(d.edwards->e)},
                         {"d", hex_out(d.edwards->d)},
                         {"ugen", hex_out(d.edwards->ugen)},
                         {"vgen", hex_out(d.edwards->vgen)}};
      }
      if(d.twist) {
         o["twist"] = {{"h_t", d.twist->h_t}, {"q_t", hex_out(d.twist->q_t)}};
      }
      if(d.full_order) {
         o["full_order"] = {{"x", hex_out(d.full_order->x)}, {"y", hex_out(d.full_order->y)}};
      }
      arr.push_back(std::move(o));
   }
   return json{{"curves", arr}}.dump(1);
}

CurveDatabase parse_database(std::string_view text) {
   std::vector<CurveDescriptor> curves = parse_curves_json(text);
   for(const auto& c : curves) {
      validate_curve(c);
   }
   return CurveDatabase(std::move(curves));
}

CurveDatabase load_database(const std::filesystem::path& path) {
   std::ifstream in(path);
   if(!in) {
      throw_error(ErrorCode::ParseError, "cannot open " + path.string());
   }
   std::ostringstream ss;
   ss << in.rdbuf();
   return parse_database(ss.str());
}

const CurveDatabase& bundled_database() {
   static const CurveDatabase db = parse_database(bundled_database_json());
   return db;
}

}  // namespace ctec
