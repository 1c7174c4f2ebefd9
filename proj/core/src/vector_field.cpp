#include "loday/vector_field.hpp"

#include <algorithm>

#include "loday/errors.hpp"

namespace loday {

VectorField::VectorField(ChartPtr base, Parity parity) : chart_(std::move(base)), parity_(parity) {
  if (!chart_) throw ChartError("vector field requires a chart");
  comps_.assign(chart_->size(), SuperPolynomial(chart_));
}

VectorField::VectorField(ChartPtr base, Parity parity, std::vector<SuperPolynomial> components)
    : chart_(std::move(base)), parity_(parity), comps_(std::move(components)) {
  if (!chart_) throw ChartError("vector field requires a chart");
  if (comps_.size() != chart_->size()) throw ChartError("vector field: one component per coordinate required");
  for (std::size_t a = 0; a < comps_.size(); ++a) {
    require_same_chart(comps_[a].chart(), chart_, "vector field component");
    if (comps_[a].is_zero()) continue;
    const auto p = grade_info(comps_[a]).parity;
    if (!p || *p != parity_ + (*chart_)[a].parity)
      throw StructureError("vector field: component for '" + (*chart_)[a].name + "' has the wrong parity for a " +
                           std::string(to_string(parity_)) + " field");
  }
}

VectorField VectorField::partial(ChartPtr base, std::size_t a) {
  const auto p = (*base)[a].parity;
  std::vector<SuperPolynomial> comps(base->size(), SuperPolynomial(base));
  comps[a] = SuperPolynomial::constant(base, Rational(1));
  return VectorField(base, p, std::move(comps));
}

bool VectorField::is_zero() const noexcept {
  return std::all_of(comps_.begin(), comps_.end(), [](const SuperPolynomial& c) { return c.is_zero(); });
}

namespace {

void require_compatible(const VectorField& a, const VectorField& b, const char* op) {
  require_same_chart(a.chart(), b.chart(), op);
  if (a.parity() != b.parity() && !a.is_zero() && !b.is_zero())
    throw StructureError(std::string(op) + ": vector fields of different parity");
}

}  // namespace

VectorField& VectorField::operator+=(const VectorField& other) {
  require_compatible(*this, other, "add");
  if (is_zero()) parity_ = other.parity_;
  for (std::size_t a = 0; a < comps_.size(); ++a) comps_[a] += other.comps_[a];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& other) {
  require_compatible(*this, other, "subtract");
  if (is_zero()) parity_ = other.parity_;
  for (std::size_t a = 0; a < comps_.size(); ++a) comps_[a] -= other.comps_[a];
  return *this;
}

VectorField& VectorField::operator*=(const Rational& c) {
  for (auto& comp : comps_) comp *= c;
  return *this;
}

VectorField operator*(const SuperPolynomial& f, const VectorField& X) {
  require_same_chart(f.chart(), X.chart(), "scale vector field");
  const Parity p = parity_of(f) + X.parity();
  std::vector<SuperPolynomial> comps;
  comps.reserve(X.components().size());
  for (const auto& c : X.components()) comps.push_back(f * c);
  return VectorField(X.chart(), p, std::move(comps));
}

bool operator==(const VectorField& a, const VectorField& b) {
  if (!same_chart(a.chart_, b.chart_)) return false;
  if (a.is_zero() && b.is_zero()) return true;
  return a.parity_ == b.parity_ && a.comps_ == b.comps_;
}

SuperPolynomial apply(const VectorField& X, const SuperPolynomial& f) {
  require_same_chart(X.chart(), f.chart(), "apply");
  SuperPolynomial out(f.chart());
  for (std::size_t a = 0; a < X.components().size(); ++a) {
    const auto& comp = X.component(a);
    if (comp.is_zero()) continue;
    const auto d = left_partial(f, a);
    if (!d.is_zero()) out += comp * d;
  }
  return out;
}

SuperPolynomial symbol(const VectorField& X, const PhaseSpace& ps) {
  require_same_chart(X.chart(), ps.base(), "symbol");
  SuperPolynomial out(ps.lifted());
  for (std::size_t a = 0; a < ps.dimension(); ++a) {
    const auto& comp = X.component(a);
    if (comp.is_zero()) continue;
    out += ps.embed(comp) * ps.momentum(a);
  }
  return out;
}

VectorField field_from_symbol(const SuperPolynomial& F, const PhaseSpace& ps, Parity zero_parity) {
  if (F.is_zero()) return VectorField(ps.base(), zero_parity);
  const auto deg = fiber_degree(ps, F);
  if (!deg || *deg != 1) throw DegreeError("field_from_symbol: function is not of fiber degree one");
  const auto p = grade_info(F).parity;
  if (!p) throw StructureError("field_from_symbol: symbol is not parity-homogeneous");
  std::vector<SuperPolynomial> comps;
  comps.reserve(ps.dimension());
  for (std::size_t a = 0; a < ps.dimension(); ++a)
    comps.push_back(ps.project(canonical_poisson(ps, F, ps.position(a))));
  return VectorField(ps.base(), *p, std::move(comps));
}

VectorField commutator(const VectorField& X, const VectorField& Y, const PhaseSpace& ps) {
  const auto bracket = canonical_poisson(ps, symbol(X, ps), symbol(Y, ps));
  return field_from_symbol(bracket, ps, X.parity() + Y.parity());
}

VectorField commutator_by_components(const VectorField& X, const VectorField& Y) {
  require_same_chart(X.chart(), Y.chart(), "commutator");
  const int s = koszul(X.parity(), Y.parity());
  std::vector<SuperPolynomial> comps;
  comps.reserve(X.components().size());
  for (std::size_t a = 0; a < X.components().size(); ++a)
    comps.push_back(apply(X, Y.component(a)) - s * apply(Y, X.component(a)));
  return VectorField(X.chart(), X.parity() + Y.parity(), std::move(comps));
}

}  // namespace loday
