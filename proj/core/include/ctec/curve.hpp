#pragma once

#include <ctec/curves.hpp>
#include <ctec/scalar.hpp>
#include <ctec/tepoint.hpp>
#include <ctec/wpoint.hpp>

#include <memory>
#include <optional>

namespace ctec {

/// Internal arithmetic model. Points always cross the API in Weierstrass
/// form; TwistedEdwards curves map in and out around each multiplication.
enum class Model {
   Weierstrass,
   TwistedEdwards,
};

std::string_view to_string(Model m);

struct CombTables;

struct CurveOptions {
      unsigned window = 5;
      std::size_t l1_budget = 16384;
};

/// Runtime context for one curve: field, scalar field, both coordinate
/// systems and the fixed-base tables. Immutable once created.
class Curve {
   public:
      static std::shared_ptr<const Curve> create(const CurveDescriptor& desc, CurveOptions opts = {});

      Curve(const Curve&) = delete;
      Curve& operator=(const Curve&) = delete;
      ~Curve();

      const CurveDescriptor& descriptor() const { return m_desc; }

      const std::string& name() const { return m_desc.name; }

      const Field& field() const { return m_field; }

      const ScalarField& scalars() const { return m_scalars; }

      const WCurve& weierstrass() const { return m_w; }

      /// nullptr when the curve has no Edwards form.
      const TECurve* edwards() const { return m_te ? &*m_te : nullptr; }

      Model model() const { return m_model; }

      unsigned cofactor() const { return m_desc.h; }

      unsigned window() const { return m_opts.window; }

      const CurveOptions& options() const { return m_opts; }

      AffinePoint generator() const { return m_g; }

      const CombTables& comb() const { return *m_comb; }

      /// Field element from big-endian bytes of a value < p.
      FieldElement fe(std::span<const std::uint8_t> be) const;

   private:
      Curve(const CurveDescriptor& desc, CurveOptions opts);

      CurveDescriptor m_desc;
      CurveOptions m_opts;
      Field m_field;
      ScalarField m_scalars;
      WCurve m_w;
      std::optional<TECurve> m_te;
      Model m_model;
      AffinePoint m_g;
      std::unique_ptr<const CombTables> m_comb;
};

/// Shared instance for a curve of the bundled database, built on first use.
/// Throws Error(NotFound).
std::shared_ptr<const Curve> curve_by_name(std::string_view name);

}  // namespace ctec
