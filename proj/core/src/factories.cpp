#include "loday/factories.hpp"

#include <algorithm>
#include <numeric>

#include "loday/errors.hpp"
#include "loday/expression.hpp"

namespace loday {

namespace {

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  return m;
}

// f on a chart whose first base->size() coordinates are the base chart.
SuperPolynomial extend(const SuperPolynomial& f, const ChartPtr& target) {
  return reembed(f, target, identity_map(f.chart()->size()));
}

// Terms of f free of every coordinate past the first base->size(), as a
// function on base.
SuperPolynomial restrict_to(const SuperPolynomial& f, const ChartPtr& base) {
  SuperPolynomial out(base);
  const auto n = base->size();
  for (const auto& [m, c] : f.terms()) {
    bool keep = true;
    for (std::size_t i = n; i < m.size() && keep; ++i) keep = m[i] == 0;
    if (!keep) continue;
    Monomial e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = m[i];
    out.add_term(e, c);
  }
  return out;
}

bool same_layout(const Chart& a, const Chart& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].parity != b[i].parity || a[i].weight != b[i].weight) return false;
  return true;
}

bool same_field(const VectorField& built, const VectorField& given) {
  for (std::size_t a = 0; a < given.components().size(); ++a)
    if (!(extend(built.component(a), given.chart()) == given.component(a))) return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// LieAlgebroidData

LieAlgebroidData::LieAlgebroidData(ChartPtr base, std::vector<Parity> index_parity)
    : base_(std::move(base)), index_parity_(std::move(index_parity)) {
  if (!base_) throw DataError("Lie algebroid data requires a base chart");
  if (index_parity_.empty()) throw DataError("Lie algebroid data requires a fibre of positive rank");
}

void LieAlgebroidData::check_index(std::size_t alpha) const {
  if (alpha >= rank()) throw DataError("fibre index out of range");
}

void LieAlgebroidData::set_anchor(std::size_t alpha, std::size_t A, SuperPolynomial f) {
  check_index(alpha);
  if (A >= base_->size()) throw DataError("base index out of range");
  if (!same_chart(f.chart(), base_)) throw DataError("anchor component is not a function on the base");
  if (f.is_zero())
    anchor_.erase({alpha, A});
  else
    anchor_.insert_or_assign({alpha, A}, std::move(f));
}

void LieAlgebroidData::set_structure(std::size_t gamma, std::size_t beta, std::size_t alpha, SuperPolynomial f) {
  check_index(gamma);
  check_index(beta);
  check_index(alpha);
  if (!same_chart(f.chart(), base_)) throw DataError("structure function is not a function on the base");
  if (beta > alpha) {
    f = -koszul(index_parity(alpha), index_parity(beta)) * f;
    std::swap(alpha, beta);
  }
  if (beta == alpha && index_parity(alpha) == Parity::Even && !f.is_zero())
    throw DataError("structure function Q^" + std::to_string(gamma) + "_{" + std::to_string(alpha) + std::to_string(alpha) +
                    "} must vanish for an even index");
  const auto key = std::tuple{gamma, beta, alpha};
  if (auto it = structure_.find(key); it != structure_.end() && !(it->second == f))
    throw DataError("structure function Q^" + std::to_string(gamma) + "_{" + std::to_string(beta) + std::to_string(alpha) +
                    "} violates the symmetry with its mirrored slot");
  if (f.is_zero())
    structure_.erase(key);
  else
    structure_.insert_or_assign(key, std::move(f));
}

SuperPolynomial LieAlgebroidData::anchor(std::size_t alpha, std::size_t A) const {
  if (auto it = anchor_.find({alpha, A}); it != anchor_.end()) return it->second;
  return SuperPolynomial(base_);
}

SuperPolynomial LieAlgebroidData::structure(std::size_t gamma, std::size_t beta, std::size_t alpha) const {
  if (beta > alpha) return -koszul(index_parity(alpha), index_parity(beta)) * structure(gamma, alpha, beta);
  if (auto it = structure_.find({gamma, beta, alpha}); it != structure_.end()) return it->second;
  return SuperPolynomial(base_);
}

bool operator==(const LieAlgebroidData& a, const LieAlgebroidData& b) {
  return same_chart(a.base_, b.base_) && a.index_parity_ == b.index_parity_ && a.anchor_ == b.anchor_ &&
         a.structure_ == b.structure_;
}

// ---------------------------------------------------------------------------
// Constructors

OddJacobiStructure make_schouten(const PhaseSpace& ps, const SuperPolynomial& S) {
  return OddJacobiStructure(ps, S, VectorField(ps.base(), Parity::Odd));
}

OddJacobiStructure make_q_manifold(ChartPtr chart, const VectorField& Q) {
  auto ps = lift(std::move(chart));
  auto zero = SuperPolynomial(ps.lifted());
  return OddJacobiStructure(std::move(ps), std::move(zero), Q);
}

OddJacobiStructure make_odd_contact(unsigned n) {
  if (n == 0) throw UsageError("odd contact structure needs n >= 1");
  std::vector<CoordinateSpec> specs;
  auto suffix = [&](unsigned a) { return n == 1 ? std::string() : std::to_string(a + 1); };
  for (unsigned a = 0; a < n; ++a) specs.push_back({"x" + suffix(a), Parity::Even, {}});
  for (unsigned a = 0; a < n; ++a) specs.push_back({"xs" + suffix(a), Parity::Odd, {}});
  specs.push_back({"tau", Parity::Odd, {}});
  auto ps = lift(Chart::make(std::move(specs)));
  const auto tau = 2 * n;
  SuperPolynomial S(ps.lifted());
  for (unsigned a = 0; a < n; ++a)
    S += ps.momentum(n + a) * (ps.momentum(a) + ps.position(n + a) * ps.momentum(tau));
  auto Q = -VectorField::partial(ps.base(), tau);
  return OddJacobiStructure(ps, S, Q);
}

LieAlgebroid make_lie_algebroid(const LieAlgebroidData& d) {
  auto specs = d.base()->specs();
  const auto n = specs.size();
  for (auto& s : specs) s.weight = Weight{0};
  for (std::size_t a = 0; a < d.rank(); ++a)
    specs.push_back({"xi" + std::to_string(a + 1), d.index_parity(a) + 1, Weight{1}});
  auto chart = Chart::make(std::move(specs));
  auto xi = [&](std::size_t a) { return SuperPolynomial::coordinate(chart, n + a); };
  std::vector<SuperPolynomial> comps(chart->size(), SuperPolynomial(chart));
  for (std::size_t A = 0; A < n; ++A)
    for (std::size_t a = 0; a < d.rank(); ++a) {
      const auto q = d.anchor(a, A);
      if (!q.is_zero()) comps[A] += xi(a) * extend(q, chart);
    }
  const Rational half(1, 2);
  for (std::size_t g = 0; g < d.rank(); ++g)
    for (std::size_t a = 0; a < d.rank(); ++a)
      for (std::size_t b = 0; b < d.rank(); ++b) {
        const auto q = d.structure(g, b, a);
        if (!q.is_zero()) comps[n + g] += half * (xi(a) * xi(b) * extend(q, chart));
      }
  try {
    return {chart, VectorField(chart, Parity::Odd, std::move(comps))};
  } catch (const StructureError& e) {
    throw DataError(std::string("Lie algebroid data has inconsistent parities: ") + e.what());
  }
}

OddJacobiStructure make_jacobi_algebroid(const LieAlgebroidData& d, const CocycleData& c) {
  if (c.components.size() != d.rank()) throw DataError("cocycle needs one component per fibre index");
  auto specs = d.base()->specs();
  const auto n = specs.size();
  for (auto& s : specs) s.weight = Weight{0};
  for (std::size_t a = 0; a < d.rank(); ++a)
    specs.push_back({"eta" + std::to_string(a + 1), d.index_parity(a) + 1, Weight{1}});
  auto ps = lift(Chart::make(std::move(specs)));
  const auto& lifted = ps.lifted();
  auto up = [&](const SuperPolynomial& f) { return ps.embed(extend(f, ps.base())); };
  auto pi = [&](std::size_t a) { return ps.momentum(n + a); };
  auto eta = [&](std::size_t a) { return ps.position(n + a); };

  SuperPolynomial S(lifted);
  for (std::size_t a = 0; a < d.rank(); ++a) {
    const int sa = sgn(bit(d.index_parity(a)));
    for (std::size_t A = 0; A < n; ++A) {
      const auto q = d.anchor(a, A);
      if (!q.is_zero()) S += sa * (pi(a) * up(q) * ps.momentum(A));
    }
  }
  const Rational half(1, 2);
  for (std::size_t a = 0; a < d.rank(); ++a)
    for (std::size_t b = 0; b < d.rank(); ++b)
      for (std::size_t g = 0; g < d.rank(); ++g) {
        const auto q = d.structure(g, b, a);
        if (q.is_zero()) continue;
        const int s = -sgn(bit(d.index_parity(a)) + bit(d.index_parity(b)));
        S += (s * half) * (pi(a) * pi(b) * up(q) * eta(g));
      }
  SuperPolynomial Qs(lifted);
  for (std::size_t a = 0; a < d.rank(); ++a) {
    if (!same_chart(c.components[a].chart(), d.base())) throw DataError("cocycle component is not a function on the base");
    if (!c.components[a].is_zero()) Qs += pi(a) * up(c.components[a]);
  }
  if (!Qs.is_zero() && grade_info(Qs).parity != Parity::Odd)
    throw DataError("cocycle component Q_a must have the parity of its index");
  try {
    auto Q = field_from_symbol(Qs, ps, Parity::Odd);
    return OddJacobiStructure(ps, S, Q);
  } catch (const StructureError& e) {
    throw DataError(std::string("Jacobi algebroid data has inconsistent parities: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Recognition

namespace {

std::optional<unsigned> as_odd_contact(const OddJacobiStructure& J) {
  const auto& chart = *J.chart();
  if (chart.size() < 3 || chart.size() % 2 == 0) return std::nullopt;
  const unsigned n = static_cast<unsigned>((chart.size() - 1) / 2);
  const auto K = make_odd_contact(n);
  if (!same_layout(*K.chart(), chart)) return std::nullopt;
  if (!(extend(K.S(), J.phase_space().lifted()) == J.S())) return std::nullopt;
  if (!same_field(K.Q(), J.Q())) return std::nullopt;
  return n;
}

// Number of leading even weight-0 coordinates, if the rest are odd of weight 1.
std::optional<std::size_t> algebroid_split(const Chart& chart) {
  std::size_t n = 0;
  while (n < chart.size() && chart[n].weight == Weight{0} && chart[n].parity == Parity::Even) ++n;
  if (n == chart.size()) return std::nullopt;
  for (std::size_t i = n; i < chart.size(); ++i)
    if (chart[i].weight != Weight{1} || chart[i].parity != Parity::Odd) return std::nullopt;
  return n;
}

ChartPtr base_of(const Chart& chart, std::size_t n) {
  auto specs = chart.specs();
  specs.resize(n);
  return Chart::make(std::move(specs));
}

std::optional<LieAlgebroidData> as_lie_algebroid(const OddJacobiStructure& J) {
  if (!J.S().is_zero()) return std::nullopt;
  const auto& chart = *J.chart();
  const auto n = algebroid_split(chart);
  if (!n) return std::nullopt;
  const auto r = chart.size() - *n;
  auto base = base_of(chart, *n);
  try {
    LieAlgebroidData d(base, std::vector<Parity>(r, Parity::Even));
    const auto& Q = J.Q();
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t A = 0; A < *n; ++A) d.set_anchor(a, A, restrict_to(left_partial(Q.component(A), *n + a), base));
    for (std::size_t g = 0; g < r; ++g)
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < a; ++b)
          d.set_structure(g, b, a,
                          restrict_to(left_partial(left_partial(Q.component(*n + g), *n + a), *n + b), base));
    const auto built = make_lie_algebroid(d);
    if (!same_layout(*built.chart, chart) || !same_field(built.Q, Q)) return std::nullopt;
    return d;
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<JacobiAlgebroidOrigin> as_jacobi_algebroid(const OddJacobiStructure& J) {
  if (J.S().is_zero()) return std::nullopt;
  const auto& chart = *J.chart();
  const auto n = algebroid_split(chart);
  if (!n) return std::nullopt;
  const auto N = chart.size();
  const auto r = N - *n;
  const auto& ps = J.phase_space();
  auto base = base_of(chart, *n);
  auto down = [&](const SuperPolynomial& f) { return restrict_to(ps.project(f.is_zero() ? f : f), base); };
  auto lifted_restrict = [&](const SuperPolynomial& f) {
    // Keep only the terms free of momenta and fibre coordinates.
    SuperPolynomial out(base);
    for (const auto& [m, c] : f.terms()) {
      bool keep = true;
      for (std::size_t i = *n; i < m.size() && keep; ++i) keep = m[i] == 0;
      if (!keep) continue;
      Monomial e(*n);
      for (std::size_t i = 0; i < *n; ++i) e[i] = m[i];
      out.add_term(e, c);
    }
    return out;
  };
  (void)down;
  try {
    LieAlgebroidData d(base, std::vector<Parity>(r, Parity::Even));
    const auto pi = [&](std::size_t a) { return ps.momentum_index(*n + a); };
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t A = 0; A < *n; ++A)
        d.set_anchor(a, A, lifted_restrict(left_partial(left_partial(J.S(), ps.momentum_index(A)), pi(a))));
    for (std::size_t g = 0; g < r; ++g)
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < a; ++b)
          d.set_structure(g, b, a,
                          -lifted_restrict(left_partial(left_partial(left_partial(J.S(), *n + g), pi(a)), pi(b))));
    CocycleData c;
    for (std::size_t a = 0; a < r; ++a) c.components.push_back(lifted_restrict(left_partial(J.Q_symbol(), pi(a))));
    const auto K = make_jacobi_algebroid(d, c);
    if (!same_layout(*K.chart(), chart)) return std::nullopt;
    if (!(extend(K.S(), ps.lifted()) == J.S())) return std::nullopt;
    if (!same_field(K.Q(), J.Q())) return std::nullopt;
    return JacobiAlgebroidOrigin{std::move(d), std::move(c)};
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

ModelOrigin recognize(const OddJacobiStructure& J) {
  if (auto n = as_odd_contact(J)) return OddContactOrigin{*n};
  if (auto d = as_lie_algebroid(J)) return LieAlgebroidOrigin{std::move(*d)};
  if (auto j = as_jacobi_algebroid(J)) return std::move(*j);
  return GenericOrigin{};
}

std::string_view origin_name(const ModelOrigin& o) {
  struct V {
    std::string_view operator()(const GenericOrigin&) const { return "generic"; }
    std::string_view operator()(const OddContactOrigin&) const { return "odd-contact"; }
    std::string_view operator()(const LieAlgebroidOrigin&) const { return "lie-algebroid"; }
    std::string_view operator()(const JacobiAlgebroidOrigin&) const { return "jacobi-algebroid"; }
  };
  return std::visit(V{}, o);
}

// ---------------------------------------------------------------------------
// Displays

namespace {

class DisplayRun {
 public:
  DisplayRun(const OddJacobiStructure& J, const VerifyOptions& opts)
      : J(J), opts_(opts), sampler(J.chart(), opts.sampler, 0) {
    report.id = IdentityId::ReferenceDisplays;
    report.seed = opts.seed;
  }

  void reseed(unsigned t) { sampler.engine().seed(trial_seed(opts_.seed, IdentityId::ReferenceDisplays, t)); }

  void compare(const std::string& display, std::vector<SuperPolynomial> inputs, const SuperPolynomial& normative,
               const SuperPolynomial& displayed) {
    auto& m = mismatches_[display];
    order_.push_back(display);
    const auto diff = normative - displayed;
    if (diff.is_zero()) return;
    if (m.count++ == 0) {
      std::string in;
      const char* names[] = {"f", "g", "h"};
      for (std::size_t i = 0; i < inputs.size(); ++i)
        in += (i ? ", " : "") + std::string(names[std::min<std::size_t>(i, 2)]) + " = " + print_expr(inputs[i]);
      m.first = in;
    }
    if (witnesses_.size() < max_witnesses) witnesses_.push_back({display, std::move(inputs), diff});
  }

  CheckReport finish(unsigned trials) {
    report.trials = trials;
    std::vector<std::string> seen;
    for (const auto& name : order_) {
      if (std::find(seen.begin(), seen.end(), name) != seen.end()) continue;
      seen.push_back(name);
      const auto& m = mismatches_[name];
      if (m.count)
        report.flags.push_back(name + ": differs from the normative computation on " + std::to_string(m.count) +
                               " of " + std::to_string(trials) + " trials (first: " + m.first + ")");
    }
    report.status = report.flags.empty() ? CheckStatus::Pass : CheckStatus::ExpectedFailConfirmed;
    report.witnesses = std::move(witnesses_);
    return std::move(report);
  }

  const OddJacobiStructure& J;
  CheckReport report;

 private:
  struct Mismatch {
    unsigned count = 0;
    std::string first;
  };
  VerifyOptions opts_;
  std::map<std::string, Mismatch> mismatches_;
  std::vector<std::string> order_;
  std::vector<Witness> witnesses_;

 public:
  PolynomialSampler sampler;
};

SuperPolynomial d(const SuperPolynomial& f, std::size_t i) { return left_partial(f, i); }

CheckReport odd_contact_displays(const OddJacobiStructure& J, unsigned n, const VerifyOptions& opts) {
  DisplayRun run(J, opts);
  const auto& chart = J.chart();
  const std::size_t tau = 2 * n;
  auto coord = [&](std::size_t i) { return SuperPolynomial::coordinate(chart, i); };
  auto odd_display = [&](const SuperPolynomial& f, const SuperPolynomial& g) {
    const int s = sgn(bit(parity_of(f)) + 1);
    SuperPolynomial out(chart);
    for (std::size_t a = 0; a < n; ++a) {
      const std::size_t x = a, xs = n + a;
      out += s * (d(f, xs) * d(g, x)) - d(f, x) * d(g, xs);
      out += coord(xs) * d(f, xs) * d(g, tau) - s * (d(f, tau) * coord(xs) * d(g, xs));
    }
    out += f * d(g, tau) - s * (d(f, tau) * g);
    return out;
  };
  auto loday_display = [&](const SuperPolynomial& f, const SuperPolynomial& g) {
    const int s = sgn(bit(parity_of(f)));
    SuperPolynomial out(chart);
    const auto ft = d(f, tau);
    for (std::size_t a = 0; a < n; ++a) {
      const std::size_t x = a, xs = n + a;
      out += d(ft, xs) * d(g, x) - s * (d(ft, x) * d(g, xs));
      out += s * (coord(xs) * d(ft, xs) * d(g, tau));
    }
    out += s * (ft * d(g, tau));
    return out;
  };
  const auto one = unit(J);
  const auto t = coord(tau);
  const auto b1 = odd_jacobi_bracket(J, one, t), b1d = odd_display(one, t);
  const auto ltt = loday_bracket(J, t, t), lttd = loday_display(t, t);
  run.report.notes.push_back("[[1,tau]]: normative " + print_expr(b1) + ", display " + print_expr(b1d));
  run.report.notes.push_back("{tau,tau}: normative " + print_expr(ltt) + ", display " + print_expr(lttd));
  run.compare("odd-contact [[,]] display", {one, t}, b1, b1d);
  run.compare("odd-contact {,} display", {t, t}, ltt, lttd);
  for (unsigned k = 0; k < opts.trials; ++k) {
    run.reseed(k);
    auto f = run.sampler.sample(), g = run.sampler.sample();
    run.compare("odd-contact [[,]] display", {f, g}, odd_jacobi_bracket(J, f, g), odd_display(f, g));
    run.compare("odd-contact {,} display", {f, g}, loday_bracket(J, f, g), loday_display(f, g));
  }
  return run.finish(opts.trials + 1);
}

CheckReport lie_algebroid_displays(const OddJacobiStructure& J, const LieAlgebroidData& data, const VerifyOptions& opts) {
  auto base_report = verify_identity(J, IdentityId::ReferenceDisplays, opts);
  DisplayRun run(J, opts);
  const auto& chart = J.chart();
  const auto n = data.base()->size();
  const auto r = data.rank();
  auto xi = [&](std::size_t a) { return SuperPolynomial::coordinate(chart, n + a); };
  auto up = [&](const SuperPolynomial& f) { return extend(f, chart); };
  auto ip = [&](std::size_t a) { return bit(data.index_parity(a)); };
  auto bp = [&](std::size_t A) { return bit((*chart)[A].parity); };
  std::vector<std::vector<SuperPolynomial>> anchor(r), structure;
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t A = 0; A < n; ++A) anchor[a].push_back(up(data.anchor(a, A)));
  // structure[g][b * r + a] = Q^g_{ba}
  structure.resize(r);
  for (std::size_t g = 0; g < r; ++g)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t a = 0; a < r; ++a) structure[g].push_back(up(data.structure(g, b, a)));
  auto Qs = [&](std::size_t g, std::size_t b, std::size_t a) -> const SuperPolynomial& { return structure[g][b * r + a]; };

  auto display = [&](const SuperPolynomial& phi, const SuperPolynomial& psi) {
    const int pp = bit(parity_of(phi));
    SuperPolynomial out(chart);
    for (std::size_t g = 0; g < r; ++g)
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t A = 0; A < n; ++A)
          for (std::size_t B = 0; B < n; ++B) {
            if (anchor[a][B].is_zero() || anchor[g][A].is_zero()) continue;
            out += sgn(bp(B) * pp + (bp(B) + 1) * ip(g)) *
                   (xi(g) * xi(a) * anchor[a][B] * anchor[g][A] * d(phi, A) * d(psi, B));
          }
    const Rational half(1, 2), quarter(1, 4);
    for (std::size_t g = 0; g < r; ++g)
      for (std::size_t dl = 0; dl < r; ++dl)
        for (std::size_t a = 0; a < r; ++a) {
          const auto xxx = xi(g) * xi(dl) * xi(a);
          if (xxx.is_zero()) continue;
          for (std::size_t B = 0; B < n; ++B)
            for (std::size_t e = 0; e < r; ++e) {
              if (!anchor[a][B].is_zero() && !Qs(e, dl, g).is_zero())
                out += (half * sgn(bp(B) * (pp + 1) + (ip(g) + ip(dl)) * (bp(B) + 1))) *
                       (xxx * anchor[a][B] * Qs(e, dl, g) * d(phi, n + e) * d(psi, B));
              if (!Qs(e, a, dl).is_zero() && !anchor[g][B].is_zero())
                out += (half * sgn((ip(e) + 1) * (pp + 1) + ip(e) * (ip(g) + 1))) *
                       (xxx * Qs(e, a, dl) * anchor[g][B] * d(phi, B) * d(psi, n + e));
            }
        }
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t e = 0; e < r; ++e)
        for (std::size_t rho = 0; rho < r; ++rho)
          for (std::size_t g = 0; g < r; ++g)
            for (std::size_t dl = 0; dl < r; ++dl)
              for (std::size_t a = 0; a < r; ++a) {
                if (Qs(b, dl, g).is_zero() || Qs(a, rho, e).is_zero()) continue;
                const auto xs = xi(e) * xi(rho) * xi(g) * xi(dl);
                if (xs.is_zero()) continue;
                out += (quarter * sgn((ip(b) + 1) * (pp + 1) + ip(b) * (ip(e) + ip(rho)))) *
                       (xs * Qs(b, dl, g) * Qs(a, rho, e) * d(phi, n + a) * d(psi, n + b));
              }
    return out;
  };
  for (unsigned k = 0; k < opts.trials; ++k) {
    run.reseed(k);
    auto f = run.sampler.sample(), g = run.sampler.sample();
    run.compare("Lie algebroid weight-two {,} display", {f, g}, loday_bracket(J, f, g), display(f, g));
  }
  auto rep = run.finish(opts.trials);
  for (auto& fl : base_report.flags) rep.flags.push_back(std::move(fl));
  for (auto& w : base_report.witnesses)
    if (rep.witnesses.size() < max_witnesses) rep.witnesses.push_back(std::move(w));
  if (base_report.status == CheckStatus::Fail) {
    rep.status = CheckStatus::Fail;
    rep.notes.push_back("Q-manifold displays failed");
  } else {
    rep.notes.push_back("Q-manifold displays: " + std::string(to_string(base_report.status)));
  }
  return rep;
}

CheckReport jacobi_algebroid_displays(const OddJacobiStructure& J, const JacobiAlgebroidOrigin& o,
                                      const VerifyOptions& opts) {
  DisplayRun run(J, opts);
  const auto& chart = J.chart();
  const auto& data = o.data;
  const auto n = data.base()->size();
  const auto r = data.rank();
  auto eta = [&](std::size_t a) { return SuperPolynomial::coordinate(chart, n + a); };
  auto up = [&](const SuperPolynomial& f) { return extend(f, chart); };
  auto ip = [&](std::size_t a) { return bit(data.index_parity(a)); };
  auto bp = [&](std::size_t A) { return bit((*chart)[A].parity); };
  std::vector<std::vector<SuperPolynomial>> anchor(r);
  std::vector<SuperPolynomial> cocycle;
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t A = 0; A < n; ++A) anchor[a].push_back(up(data.anchor(a, A)));
    cocycle.push_back(up(o.cocycle.components[a]));
  }
  // Structure functions as they enter S.
  auto Qs = [&](std::size_t g, std::size_t b, std::size_t a) { return -up(data.structure(g, b, a)); };

  auto odd_display = [&](const SuperPolynomial& X, const SuperPolynomial& Y) {
    const int px = bit(parity_of(X));
    SuperPolynomial out(chart);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t A = 0; A < n; ++A) {
        if (anchor[a][A].is_zero()) continue;
        out += anchor[a][A] * (sgn((px + ip(a) + 1) * (bp(A) + 1)) * (d(X, n + a) * d(Y, A)) -
                               sgn((px + 1) * ip(a)) * (d(X, A) * d(Y, n + a)));
      }
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b)
        for (std::size_t g = 0; g < r; ++g) {
          const auto q = Qs(g, a, b);
          if (q.is_zero()) continue;
          out -= sgn((px + 1) * ip(a) + ip(b)) * (q * eta(g) * d(X, n + b) * d(Y, n + a));
        }
    for (std::size_t a = 0; a < r; ++a) {
      out += sgn(px) * (cocycle[a] * d(X, n + a) * Y);
      out += X * cocycle[a] * d(Y, n + a);
    }
    return out;
  };
  auto loday_display = [&](const SuperPolynomial& X, const SuperPolynomial& Y) {
    const int px = bit(parity_of(X));
    SuperPolynomial out(chart);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t A = 0; A < n; ++A) {
        if (anchor[a][A].is_zero()) continue;
        SuperPolynomial inner(chart);
        for (std::size_t dl = 0; dl < r; ++dl) {
          inner += sgn(bp(A) * (px + ip(a))) * (cocycle[dl] * d(d(X, n + a), n + dl) * d(Y, A));
          inner += sgn(px * (ip(a) + 1)) * (d(cocycle[dl], A) * d(X, n + dl) * d(Y, n + a));
          inner += sgn(px * (ip(a) + 1) + bp(A)) * (cocycle[dl] * d(d(X, A), n + dl) * d(Y, n + a));
        }
        out += anchor[a][A] * inner;
      }
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b)
        for (std::size_t g = 0; g < r; ++g) {
          const auto q = Qs(g, a, b);
          if (q.is_zero()) continue;
          for (std::size_t dl = 0; dl < r; ++dl)
            out -= sgn(px * (ip(a) + 1)) * (q * eta(g) * cocycle[dl] * d(d(X, n + b), n + dl) * d(Y, n + a));
        }
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b)
        out += sgn(ip(a) * (px + 1)) * (cocycle[a] * cocycle[b] * d(X, n + b) * d(Y, n + a));
    return out;
  };
  auto star_display = [&](const SuperPolynomial& X, const SuperPolynomial& Y) {
    SuperPolynomial out(chart);
    for (std::size_t a = 0; a < r; ++a) out += cocycle[a] * d(X, n + a);
    return sgn(bit(parity_of(X)) + 1) * (out * Y);
  };

  {
    std::vector<SuperPolynomial> comps(chart->size(), SuperPolynomial(chart));
    for (std::size_t a = 0; a < r; ++a) comps[n + a] = cocycle[a];
    SuperPolynomial displayed = symbol(VectorField(chart, Parity::Odd, comps), J.phase_space());
    run.compare("Q = Q_a d/deta_a", {}, J.Q_symbol(), displayed);
  }
  for (unsigned k = 0; k < opts.trials; ++k) {
    run.reseed(k);
    auto X = run.sampler.sample(), Y = run.sampler.sample();
    run.compare("Jacobi algebroid [[,]]_E display", {X, Y}, odd_jacobi_bracket(J, X, Y), odd_display(X, Y));
    run.compare("Jacobi algebroid {,}_E display", {X, Y}, loday_bracket(J, X, Y), loday_display(X, Y));
    run.compare("derived product display", {X, Y}, derived_product(J, X, Y), star_display(X, Y));
    const auto f = extend(restrict_to(X, data.base()), chart);
    if (!f.is_zero()) run.compare("f * X = 0 for base f", {f, Y}, derived_product(J, f, Y), SuperPolynomial(chart));
  }
  return run.finish(opts.trials);
}

}  // namespace

CheckReport verify_displays(const Model& m, const VerifyOptions& opts) {
  const auto& J = m.structure;
  if (!check_structure(J).valid()) throw StructureError("verify_displays: structure does not satisfy its defining conditions");
  struct V {
    const OddJacobiStructure& J;
    const VerifyOptions& opts;
    CheckReport operator()(const GenericOrigin&) const { return verify_identity(J, IdentityId::ReferenceDisplays, opts); }
    CheckReport operator()(const OddContactOrigin& o) const { return odd_contact_displays(J, o.n, opts); }
    CheckReport operator()(const LieAlgebroidOrigin& o) const { return lie_algebroid_displays(J, o.data, opts); }
    CheckReport operator()(const JacobiAlgebroidOrigin& o) const { return jacobi_algebroid_displays(J, o, opts); }
  };
  auto rep = std::visit(V{J, opts}, m.origin);
  rep.notes.insert(rep.notes.begin(), "model: " + std::string(origin_name(m.origin)));
  return rep;
}

CheckReport algebroid_bracket_weights(const OddJacobiStructure& J, const JacobiAlgebroidOrigin& origin,
                                      const VerifyOptions& opts) {
  auto rep = verify_identity(J, IdentityId::BracketWeights, opts);
  const auto shifts = bracket_shifts(J);
  if (!shifts || shifts->odd_bracket != -1 || shifts->loday_bracket != -2) {
    rep.status = CheckStatus::Fail;
    rep.notes.push_back("expected weight shifts -1 and -2");
  }
  const bool trivial = std::all_of(origin.cocycle.components.begin(), origin.cocycle.components.end(),
                                   [](const SuperPolynomial& q) { return q.is_zero(); });
  if (trivial) {
    auto so = opts.sampler;
    so.weight_homogeneous = true;
    PolynomialSampler sampler(J.chart(), so, 0);
    unsigned nonzero = 0;
    for (unsigned t = 0; t < opts.trials; ++t) {
      sampler.engine().seed(trial_seed(opts.seed, IdentityId::BracketWeights, t));
      auto f = sampler.sample(), g = sampler.sample();
      const auto l = loday_bracket(J, f, g);
      if (l.is_zero()) continue;
      if (nonzero++ == 0 && rep.witnesses.size() < max_witnesses) rep.witnesses.push_back({"{f,g} with zero cocycle", {f, g}, l});
    }
    if (nonzero) {
      rep.status = CheckStatus::Fail;
      rep.notes.push_back("zero cocycle: " + std::to_string(nonzero) + " sampled Loday brackets are nonzero");
    } else {
      rep.notes.push_back("zero cocycle: all " + std::to_string(opts.trials) + " sampled Loday brackets vanish");
    }
  }
  const auto displays = jacobi_algebroid_displays(J, origin, opts);
  for (const auto& f : displays.flags) rep.flags.push_back(f);
  rep.notes.push_back("coordinate displays: " + std::string(to_string(displays.status)));
  return rep;
}

CheckReport verify_model_identity(const Model& m, IdentityId id, const VerifyOptions& opts) {
  if (id == IdentityId::ReferenceDisplays) return verify_displays(m, opts);
  if (id == IdentityId::BracketWeights)
    if (const auto* j = std::get_if<JacobiAlgebroidOrigin>(&m.origin))
      return algebroid_bracket_weights(m.structure, *j, opts);
  return verify_identity(m.structure, id, opts);
}

}  // namespace loday
