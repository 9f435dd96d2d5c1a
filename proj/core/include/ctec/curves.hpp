#pragma once

#include <ctec/limbs.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ctec {

/// Which complete Weierstrass formula family applies.
enum class CoefficientClass {
   GeneralA,
   AMinus3,
   AZero,
};

std::string_view to_string(CoefficientClass c);

struct EdwardsData {
      Bytes e;
      Bytes d;
      Bytes ugen;
      Bytes vgen;
};

struct TwistData {
      unsigned h_t = 0;
      Bytes q_t;
};

struct AffineCoords {
      Bytes x;
      Bytes y;
};

/// One curve as stored in the database. All integers are big-endian octet
/// strings without leading zeros (zero is the empty string).
struct CurveDescriptor {
      std::string name;
      std::optional<std::string> oid;
      Bytes p;
      Bytes a;
      Bytes b;
      Bytes q;
      unsigned h = 1;
      Bytes gx;
      Bytes gy;
      CoefficientClass coefficient_class = CoefficientClass::GeneralA;
      std::optional<EdwardsData> edwards;
      std::optional<TwistData> twist;
      // Test-only: a generator of the whole group E(GF(p)) for h != 1.
      std::optional<AffineCoords> full_order;

      bool has_edwards() const { return edwards.has_value(); }
};

/// (s, t) of the Weierstrass/Edwards correspondence.
struct EdwardsConstants {
      Bytes s;
      Bytes t;
};

/// s = (e-d)/4, t = (e+d)/6 mod p, checked against the stored (a, b).
/// Throws Error(InvalidArgument) if the preconditions fail and
/// Error(InconsistentParameters) if the derived coefficients disagree.
EdwardsConstants derive_edwards(const CurveDescriptor& desc);

/// h*q + h_t*q_t == 2(p+1). False if no twist data is present.
bool validate_twist(const CurveDescriptor& desc);

/// Full check of every descriptor invariant. Throws Error(ValidationError)
/// naming the curve and the failing invariant.
void validate_curve(const CurveDescriptor& desc);

class CurveDatabase {
   public:
      CurveDatabase() = default;

      explicit CurveDatabase(std::vector<CurveDescriptor> curves);

      const std::vector<CurveDescriptor>& curves() const { return m_curves; }

      /// Throws Error(NotFound).
      const CurveDescriptor& get(std::string_view name) const;

      const CurveDescriptor* find(std::string_view name) const;

      std::size_t size() const { return m_curves.size(); }

   private:
      std::vector<CurveDescriptor> m_curves;
};

/// Parse the JSON schema without validating. Throws Error(ParseError).
std::vector<CurveDescriptor> parse_curves_json(std::string_view json);

/// Parse and validate every curve.
CurveDatabase parse_database(std::string_view json);

CurveDatabase load_database(const std::filesystem::path& path);

/// The database compiled into the library (parsed and validated once).
const CurveDatabase& bundled_database();

/// JSON text of the bundled database.
std::string_view bundled_database_json();

std::string to_json(const std::vector<CurveDescriptor>& curves);

}  // namespace ctec
