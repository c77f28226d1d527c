// Copyright 2026 The setmetric Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <limits>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "setmetric/axioms.hpp"
#include "setmetric/continuous.hpp"
#include "setmetric/core_metrics.hpp"
#include "setmetric/error.hpp"
#include "setmetric/hierarchy.hpp"
#include "setmetric/power_means.hpp"
#include "setmetric/samplers.hpp"
#include "setmetric/verify.hpp"
#include "workspace.hpp"

namespace setmetric::cli {

using nlohmann::json;

std::string format_value(double value)
{
  if (value == 0.0)
    return "0";
  if (std::isinf(value))
    return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------- families

enum class Family
{
  F, G, E, H, J, Symdiff, U, V, U00, V000, Dnu, Fk, IntervalF, Steinhaus, Fuzzy
};

enum class OperandKind
{
  Set, Interval, Fuzzy, Nested
};

struct FamilyInfo
{
  std::string_view name;
  Family           family;
  OperandKind      operand;
};

constexpr FamilyInfo kFamilies[] = {
    {"f", Family::F, OperandKind::Set},
    {"g", Family::G, OperandKind::Set},
    {"e", Family::E, OperandKind::Set},
    {"h", Family::H, OperandKind::Set},
    {"j", Family::J, OperandKind::Set},
    {"symdiff", Family::Symdiff, OperandKind::Set},
    {"u", Family::U, OperandKind::Set},
    {"v", Family::V, OperandKind::Set},
    {"u00", Family::U00, OperandKind::Set},
    {"v000", Family::V000, OperandKind::Set},
    {"dnu", Family::Dnu, OperandKind::Set},
    {"fk", Family::Fk, OperandKind::Nested},
    {"interval", Family::IntervalF, OperandKind::Interval},
    {"steinhaus", Family::Steinhaus, OperandKind::Interval},
    {"fuzzy", Family::Fuzzy, OperandKind::Fuzzy},
};

FamilyInfo const &family_info(std::string_view name)
{
  for (auto const &f : kFamilies)
    if (f.name == name)
      return f;
  throw UsageError("unknown family '" + std::string(name) + "'");
}

/// Families that read coordinates or a base metric, as opposed to set
/// cardinalities only.
bool uses_base_metric(Family f)
{
  switch (f)
  {
    case Family::J:
    case Family::Symdiff:
    case Family::U00:
    case Family::V000:
    case Family::Dnu:
      return false;
    default:
      return true;
  }
}

// -------------------------------------------------------------- parameters

double parse_extended(std::string const &text, char const *flag)
{
  if (text == "inf" || text == "+inf" || text == "infinity")
    return kInf;
  if (text == "-inf" || text == "-infinity")
    return -kInf;
  char  *end = nullptr;
  double v   = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || std::isnan(v) ||
      text.find_first_of("iInN") != std::string::npos)
    throw UsageError(std::string("--") + flag + ": expected a real, inf or -inf, got '" + text + "'");
  return v;
}

std::vector<double> parse_grid(std::string const &text)
{
  if (text.empty())
    return default_alpha_grid();
  std::vector<double> grid;
  std::stringstream   ss(text);
  std::string         part;
  while (std::getline(ss, part, ','))
  {
    double const a = parse_extended(part, "alpha-grid");
    if (!(a > 0.0 && a <= 1.0))
      throw UsageError("--alpha-grid: levels must lie in (0, 1]");
    grid.push_back(a);
  }
  return grid;
}

struct RawParams
{
  std::string           family = "f";
  std::string           p      = "1";
  std::string           q      = "1";
  std::string           r      = "1";
  int                   i      = 1;
  int                   j      = 1;
  int                   k      = 1;
  std::optional<double> lambda;
  double                nu    = 0.5;
  std::size_t           level = kDefaultMaxLevel;
  std::string           alpha_grid;
  double                c = kDefaultAlphaWeight;
};

struct Spec
{
  FamilyInfo            info;
  UVParams              uv;
  std::optional<double> lambda;
  double                nu    = 0.5;
  std::size_t           level = kDefaultMaxLevel;
  std::vector<double>   grid;
  double                c = kDefaultAlphaWeight;
};

void add_param_options(CLI::App &cmd, RawParams &raw)
{
  cmd.add_option("--family", raw.family, "f g e h j symdiff u v u00 v000 dnu fk interval steinhaus fuzzy")
      ->capture_default_str();
  cmd.add_option("--p", raw.p, "power-mean exponent (real, inf, -inf)")->capture_default_str();
  cmd.add_option("--q", raw.q, "inner exponent")->capture_default_str();
  cmd.add_option("--r", raw.r, "outer exponent of v")->capture_default_str();
  cmd.add_option("--i", raw.i, "mean-type selector of the p-mean (0 or 1)")->capture_default_str();
  cmd.add_option("--j", raw.j, "mean-type selector of the q-mean (0 or 1)")->capture_default_str();
  cmd.add_option("--k", raw.k, "mean-type selector of the r-mean (0 or 1)")->capture_default_str();
  cmd.add_option("--lambda", raw.lambda, "discrete-metric scale for u00/v000");
  cmd.add_option("--nu", raw.nu, "nu in [0, 1/2] for dnu")->capture_default_str();
  cmd.add_option("--level", raw.level, "depth limit for fk")->capture_default_str();
  cmd.add_option("--alpha-grid", raw.alpha_grid, "comma-separated alpha levels for fuzzy");
  cmd.add_option("--c", raw.c, "alpha weight for fuzzy")->capture_default_str();
}

Spec validate(RawParams const &raw)
{
  Spec s{family_info(raw.family), {}, raw.lambda, raw.nu, raw.level, {}, raw.c};
  for (auto [v, flag] : {std::pair{raw.i, "i"}, std::pair{raw.j, "j"}, std::pair{raw.k, "k"}})
    if (v != 0 && v != 1)
      throw UsageError(std::string("--") + flag + " must be 0 or 1");
  s.uv = {raw.i, raw.j, raw.k, parse_extended(raw.p, "p"), parse_extended(raw.q, "q"),
          parse_extended(raw.r, "r")};
  if (raw.lambda && !(*raw.lambda > 0.0 && std::isfinite(*raw.lambda)))
    throw UsageError("--lambda must be a positive finite real");
  if (!(raw.nu >= 0.0 && raw.nu <= 0.5))
    throw UsageError("--nu must lie in [0, 1/2]");
  if (raw.level < 1)
    throw UsageError("--level must be at least 1");
  if (!(raw.c >= 0.0 && std::isfinite(raw.c)))
    throw UsageError("--c must be a non-negative real");
  if (s.info.family == Family::U00 && s.uv.p < 0.0)
    throw UsageError("u00 requires --p >= 0");
  if (s.info.family == Family::V000 && s.uv.p > 0.0)
    throw UsageError("v000 requires --p <= 0");
  s.grid = parse_grid(raw.alpha_grid);
  return s;
}

// ---------------------------------------------------------------- operands

using Operand = std::variant<FiniteSet, IntervalUnion, FuzzySet, NestedSet>;

template <typename Map>
auto const &lookup(Map const &m, std::string const &name, char const *what)
{
  auto it = m.find(name);
  if (it == m.end())
    throw UsageError(std::string("unknown ") + what + " '" + name + "'");
  return it->second;
}

Operand resolve(Workspace const &ws, OperandKind kind, std::string const &name)
{
  switch (kind)
  {
    case OperandKind::Set:
      return lookup(ws.sets, name, "set");
    case OperandKind::Interval:
      return lookup(ws.intervals, name, "interval");
    case OperandKind::Fuzzy:
      return lookup(ws.fuzzy, name, "fuzzy set");
    case OperandKind::Nested:
      if (auto it = ws.nested.find(name); it != ws.nested.end())
        return it->second;
      return NestedSet::from_set(lookup(ws.sets, name, "nested set"));
  }
  throw UsageError("unreachable operand kind");
}

double lambda_for(Spec const &s, BaseMetric const &metric)
{
  if (s.lambda)
    return *s.lambda;
  return metric.is_discrete() ? metric.discrete_lambda() : 1.0;
}

double set_distance(Spec const &s, BaseMetric const &metric, FiniteSet const &a, FiniteSet const &b)
{
  switch (s.info.family)
  {
    case Family::F:
      return average_metric(metric, a, b);
    case Family::G:
      return group_average(metric, a, b);
    case Family::E:
      return semi_metric(metric, a, b);
    case Family::H:
      return hausdorff(metric, a, b);
    case Family::J:
      return jaccard(a, b);
    case Family::Symdiff:
      return static_cast<double>(symdiff_cardinality(a, b));
    case Family::U:
      return u_distance(metric, a, b, s.uv);
    case Family::V:
      return v_distance(metric, a, b, s.uv);
    case Family::U00:
      return u00_discrete_closed(a, b, s.uv.p, lambda_for(s, metric));
    case Family::V000:
      return v000_discrete_closed(a, b, s.uv.p, lambda_for(s, metric));
    case Family::Dnu:
      return d_nu(a, b, s.nu);
    default:
      throw UsageError("family '" + std::string(s.info.name) + "' does not take finite sets");
  }
}

double interval_distance(Spec const &s, IntervalUnion const &a, IntervalUnion const &b)
{
  if (s.info.family == Family::Steinhaus)
    return steinhaus(a, b);
  if (a.parts().size() == 1 && b.parts().size() == 1)
    return interval_f_closed(a.parts()[0], b.parts()[0]);
  return f_continuous(a, b);
}

double nested_distance(Spec const &s, BaseMetric const &metric, ElementRegistry const &reg, NestedSet const &a,
                       NestedSet const &b)
{
  return f_k(metric, reg, a, b, s.level);
}

double evaluate(Spec const &s, Workspace const &ws, Operand const &a, Operand const &b)
{
  switch (s.info.operand)
  {
    case OperandKind::Set:
      return set_distance(s, ws.metric, std::get<FiniteSet>(a), std::get<FiniteSet>(b));
    case OperandKind::Interval:
      return interval_distance(s, std::get<IntervalUnion>(a), std::get<IntervalUnion>(b));
    case OperandKind::Fuzzy:
      return fuzzy_distance(ws.metric, std::get<FuzzySet>(a), std::get<FuzzySet>(b), s.grid, s.c);
    case OperandKind::Nested:
      return nested_distance(s, ws.metric, *ws.registry, std::get<NestedSet>(a), std::get<NestedSet>(b));
  }
  throw UsageError("unreachable operand kind");
}

// ------------------------------------------------------- witness rendering

json to_json(FiniteSet const &s)
{
  json out = json::array();
  auto const &reg = *s.registry();
  for (auto m : s.members())
  {
    auto const payload = reg.payload(m);
    if (payload.empty())
      out.push_back(reg.id(m));
    else
      out.push_back({{"id", reg.id(m)}, {"payload", std::vector<double>(payload.begin(), payload.end())}});
  }
  return out;
}

json to_json(IntervalUnion const &u)
{
  json out = json::array();
  for (auto const &p : u.parts())
    out.push_back({p.lo, p.hi});
  return out;
}

json to_json(FuzzySet const &f)
{
  json out = json::object();
  for (auto const &[m, g] : f.grades())
    out[f.registry()->id(m)] = g;
  return out;
}

json nested_json(NestedSet const &n, ElementRegistry const &reg)
{
  if (n.level() == 0)
  {
    auto const payload = reg.payload(n.element());
    if (payload.empty())
      return reg.id(n.element());
    return {{"id", reg.id(n.element())}, {"payload", std::vector<double>(payload.begin(), payload.end())}};
  }
  json out = json::array();
  for (auto const &c : n.children())
    out.push_back(nested_json(c, reg));
  return out;
}

// A nested set together with the registry its leaves index into.
struct BoundNested
{
  RegistryPtr registry;
  NestedSet   set;

  bool operator==(BoundNested const &o) const { return registry == o.registry && set == o.set; }
};

json to_json(BoundNested const &b)
{
  return nested_json(b.set, *b.registry);
}

// ------------------------------------------------------------------ axioms

struct AxiomArgs
{
  std::string   workspace;
  bool          random = false;
  std::string   fixture;
  std::size_t   n         = 1000;
  std::uint64_t seed      = 0;
  double        tolerance = 1e-9;
  bool          as_json   = false;
  std::size_t   dim       = 2;
  std::string   axiom_set;
};

AxiomMask axiom_mask(Spec const &s, std::string const &name)
{
  if (name.empty())
    return s.info.family == Family::Dnu && s.nu < 0.5 ? kPartialMetricAxioms : kMetricAxioms;
  if (name == "metric")
    return kMetricAxioms;
  if (name == "semi")
    return kSemiMetricAxioms;
  if (name == "pseudo")
    return kPseudoMetricAxioms;
  if (name == "partial")
    return kPartialMetricAxioms;
  throw UsageError("--axiom-set must be one of metric, semi, pseudo, partial");
}

constexpr Axiom kAllAxioms[] = {Axiom::M1, Axiom::M2, Axiom::M3, Axiom::M4, Axiom::M5, Axiom::PartialM5};

template <typename T>
int emit_report(AxiomReport<T> const &r, std::string const &family, std::string const &source, AxiomMask mask,
                bool as_json, std::ostream &out)
{
  if (as_json)
  {
    json doc;
    doc["family"]    = family;
    doc["source"]    = source;
    doc["checked"]   = r.checked;
    doc["tolerance"] = r.tolerance;
    doc["axioms"]    = json::array();
    doc["counts"]    = json::object();
    for (auto a : kAllAxioms)
    {
      if (mask & bit(a))
      {
        doc["axioms"].push_back(std::string(axiom_name(a)));
        doc["counts"][std::string(axiom_name(a))] = r.count(a);
      }
    }
    doc["violations"] = json::array();
    for (auto const &v : r.violations)
    {
      json w = json::array();
      for (auto const &x : v.witness)
        w.push_back(to_json(x));
      doc["violations"].push_back({{"axiom", std::string(axiom_name(v.axiom))}, {"witness", w}, {"magnitude", v.magnitude}});
    }
    doc["clean"] = r.clean();
    out << doc.dump(2) << "\n";
  }
  else
  {
    out << "family " << family << "\n";
    out << "source " << source << "\n";
    out << "checked " << r.checked << " tuples at tolerance " << format_value(r.tolerance) << "\n";
    for (auto a : kAllAxioms)
    {
      if (mask & bit(a))
      {
        out << "  " << axiom_name(a) << ": " << r.count(a) << " violations";
        if (r.count(a) > 0)
          out << ", max magnitude " << format_value(r.max_magnitude(a));
        out << "\n";
      }
    }
    if (!r.clean())
    {
      auto const &v = r.violations.front();
      json        w = json::array();
      for (auto const &x : v.witness)
        w.push_back(to_json(x));
      out << "first witness (" << axiom_name(v.axiom) << ", magnitude " << format_value(v.magnitude)
          << "): " << w.dump() << "\n";
    }
    out << (r.clean() ? "result clean" : "result " + std::to_string(r.violations.size()) + " violations") << "\n";
  }
  return r.clean() ? kExitOk : kExitViolations;
}

template <typename T, typename Dist, typename Sampler>
int axioms_for(Dist &&dist, Sampler &&sampler, Spec const &s, AxiomArgs const &args, std::string const &source,
               std::ostream &out)
{
  AxiomCheckOptions opt;
  opt.n         = args.n;
  opt.seed      = args.seed;
  opt.tolerance = args.tolerance;
  opt.axioms    = axiom_mask(s, args.axiom_set);
  auto report   = check_axioms<T>(dist, sampler, opt);
  return emit_report(report, std::string(s.info.name), source, opt.axioms, args.as_json, out);
}

/// Uniform draw (with replacement) of three named workspace objects.
template <typename T>
auto named_sampler(std::map<std::string, T> const &objects)
{
  std::vector<T> pool;
  for (auto const &[name, obj] : objects)
    pool.push_back(obj);
  return [pool](Rng &rng) -> std::optional<std::array<T, 3>> {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    return std::array<T, 3>{pool[pick(rng)], pool[pick(rng)], pool[pick(rng)]};
  };
}

int cmd_axioms(Spec const &s, AxiomArgs const &args, std::ostream &out)
{
  if (args.n < 1)
    throw UsageError("--n must be at least 1");
  if (args.dim < 1)
    throw UsageError("--dim must be at least 1");
  int const sources = (args.workspace.empty() ? 0 : 1) + (args.random ? 1 : 0) + (args.fixture.empty() ? 0 : 1);
  if (sources != 1)
    throw UsageError("axioms needs exactly one of --workspace, --random, --fixture");

  auto const euclid = BaseMetric::euclidean();
  Workspace  random_ws;
  random_ws.metric = euclid;

  if (!args.fixture.empty())
  {
    if (args.fixture != "e-counterexample")
      throw UsageError("unknown fixture '" + args.fixture + "'; available: e-counterexample");
    if (s.info.operand != OperandKind::Set)
      throw UsageError("the e-counterexample fixture produces finite sets");
    std::size_t const dim = args.dim;
    return axioms_for<FiniteSet>(
        [&](FiniteSet const &a, FiniteSet const &b) { return set_distance(s, euclid, a, b); },
        [dim](Rng &rng) -> std::optional<std::array<FiniteSet, 3>> {
          auto cx = samplers::semi_metric_counterexample(rng, dim);
          return std::array<FiniteSet, 3>{cx.a, cx.b, cx.c};
        },
        s, args, "fixture e-counterexample", out);
  }

  if (args.random)
  {
    std::size_t const dim = args.dim;
    switch (s.info.operand)
    {
      case OperandKind::Set:
      {
        auto dist = [&](FiniteSet const &a, FiniteSet const &b) { return set_distance(s, euclid, a, b); };
        if (uses_base_metric(s.info.family))
        {
          return axioms_for<FiniteSet>(
              dist,
              [dim](Rng &rng) -> std::optional<std::array<FiniteSet, 3>> {
                return samplers::point_set_triple(rng, {12, 1, 8, dim});
              },
              s, args, "random point sets in R^" + std::to_string(dim), out);
        }
        auto const pool = samplers::tokens(12);
        return axioms_for<FiniteSet>(
            dist,
            [pool](Rng &rng) -> std::optional<std::array<FiniteSet, 3>> {
              return samplers::subset_triple(rng, pool, 1, 8);
            },
            s, args, "random subsets of a 12-element universe", out);
      }
      case OperandKind::Interval:
        return axioms_for<IntervalUnion>(
            [&](IntervalUnion const &a, IntervalUnion const &b) { return interval_distance(s, a, b); },
            [](Rng &rng) -> std::optional<std::array<IntervalUnion, 3>> {
              auto t = samplers::interval_triple(rng);
              return std::array<IntervalUnion, 3>{IntervalUnion{t[0]}, IntervalUnion{t[1]}, IntervalUnion{t[2]}};
            },
            s, args, "random intervals", out);
      case OperandKind::Nested:
        return axioms_for<BoundNested>(
            [&](BoundNested const &a, BoundNested const &b) {
              return nested_distance(s, euclid, *a.registry, a.set, b.set);
            },
            [](Rng &rng) -> std::optional<std::array<BoundNested, 3>> {
              auto t = samplers::nested_triple(rng);
              return std::array<BoundNested, 3>{BoundNested{t.registry, t.sets[0]}, BoundNested{t.registry, t.sets[1]},
                                                BoundNested{t.registry, t.sets[2]}};
            },
            s, args, "random level-2 nested collections", out);
      case OperandKind::Fuzzy:
        return axioms_for<FuzzySet>(
            [&](FuzzySet const &a, FuzzySet const &b) { return fuzzy_distance(euclid, a, b, s.grid, s.c); },
            [dim](Rng &rng) -> std::optional<std::array<FuzzySet, 3>> {
              auto reg = samplers::random_points(rng, 8, dim);
              return std::array<FuzzySet, 3>{samplers::random_fuzzy(rng, reg), samplers::random_fuzzy(rng, reg),
                                             samplers::random_fuzzy(rng, reg)};
            },
            s, args, "random fuzzy sets in R^" + std::to_string(dim), out);
    }
  }

  auto const ws     = load_workspace(args.workspace);
  auto const source = "workspace " + args.workspace;
  auto const empty  = [&](bool e, char const *what) {
    if (e)
      throw UsageError(std::string("workspace has no ") + what);
  };
  switch (s.info.operand)
  {
    case OperandKind::Set:
      empty(ws.sets.empty(), "sets");
      return axioms_for<FiniteSet>([&](FiniteSet const &a, FiniteSet const &b) { return set_distance(s, ws.metric, a, b); },
                                   named_sampler(ws.sets), s, args, source, out);
    case OperandKind::Interval:
      empty(ws.intervals.empty(), "intervals");
      return axioms_for<IntervalUnion>(
          [&](IntervalUnion const &a, IntervalUnion const &b) { return interval_distance(s, a, b); },
          named_sampler(ws.intervals), s, args, source, out);
    case OperandKind::Fuzzy:
      empty(ws.fuzzy.empty(), "fuzzy sets");
      return axioms_for<FuzzySet>(
          [&](FuzzySet const &a, FuzzySet const &b) { return fuzzy_distance(ws.metric, a, b, s.grid, s.c); },
          named_sampler(ws.fuzzy), s, args, source, out);
    case OperandKind::Nested:
    {
      std::map<std::string, BoundNested> bound;
      for (auto const &[name, set] : ws.sets)
        bound.emplace(name, BoundNested{ws.registry, NestedSet::from_set(set)});
      for (auto const &[name, set] : ws.nested)
        bound.insert_or_assign(name, BoundNested{ws.registry, set});
      empty(bound.empty(), "sets or nested sets");
      return axioms_for<BoundNested>(
          [&](BoundNested const &a, BoundNested const &b) {
            return nested_distance(s, ws.metric, *ws.registry, a.set, b.set);
          },
          named_sampler(bound), s, args, source, out);
    }
  }
  throw UsageError("unreachable operand kind");
}

// ------------------------------------------------------- other subcommands

int cmd_dist(Spec const &s, std::string const &path, std::string const &a, std::string const &b, std::ostream &out)
{
  auto const ws = load_workspace(path);
  auto const x  = resolve(ws, s.info.operand, a);
  auto const y  = resolve(ws, s.info.operand, b);
  out << format_value(evaluate(s, ws, x, y)) << "\n";
  return kExitOk;
}

std::string csv_field(std::string const &text)
{
  if (text.find_first_of(",\"\r\n") == std::string::npos)
    return text;
  std::string quoted = "\"";
  for (char c : text)
  {
    if (c == '"')
      quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

int cmd_matrix(Spec const &s, std::string const &path, std::vector<std::string> const &names, std::ostream &out)
{
  if (names.size() < 2)
    throw UsageError("matrix needs at least two names");
  auto const ws = load_workspace(path);
  std::vector<Operand> ops;
  for (auto const &n : names)
    ops.push_back(resolve(ws, s.info.operand, n));

  auto const                      n = static_cast<std::ptrdiff_t>(ops.size());
  std::vector<double>             cell(ops.size() * ops.size(), 0.0);
  std::vector<std::exception_ptr> errors(cell.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t idx = 0; idx < n * n; ++idx)
  {
    try
    {
      cell[idx] = evaluate(s, ws, ops[idx / n], ops[idx % n]);
    }
    catch (...)
    {
      errors[idx] = std::current_exception();
    }
  }
  for (auto const &e : errors)
    if (e)
      std::rethrow_exception(e);

  out << "";
  for (auto const &name : names)
    out << "," << csv_field(name);
  out << "\n";
  for (std::ptrdiff_t r = 0; r < n; ++r)
  {
    out << csv_field(names[r]);
    for (std::ptrdiff_t c = 0; c < n; ++c)
      out << "," << format_value(cell[r * n + c]);
    out << "\n";
  }
  return kExitOk;
}

int cmd_verify(std::string const &suite, std::uint64_t seed, std::ostream &out)
{
  auto const  checks = verify::run_suite(suite, seed);
  std::size_t failed = 0;
  for (auto const &c : checks)
  {
    failed += c.passed ? 0 : 1;
    out << (c.passed ? "PASS" : "FAIL") << "  " << c.suite << "  " << c.name
        << "  max_deviation=" << format_value(c.deviation) << "  tolerance=" << format_value(c.tolerance);
    if (!c.detail.empty())
      out << "  (" << c.detail << ")";
    out << "\n";
  }
  out << checks.size() << " checks, " << failed << " failed\n";
  return failed == 0 ? kExitOk : kExitViolations;
}

struct EstimateArgs
{
  std::string   workspace;
  std::string   a;
  std::string   b;
  std::string   population;
  std::size_t   n    = 1000;
  std::uint64_t seed = 0;
  std::string   mode = "random";
};

int cmd_estimate(EstimateArgs const &args, std::ostream &out)
{
  SamplingMode mode;
  if (args.mode == "random")
    mode = SamplingMode::Random;
  else if (args.mode == "systematic")
    mode = SamplingMode::Systematic;
  else
    throw UsageError("--mode must be random or systematic");
  if (args.n < 1)
    throw UsageError("--n must be at least 1");

  auto const ws = load_workspace(args.workspace);
  Estimate    est;
  double      reference = 0.0;
  bool const  intervals = ws.intervals.count(args.a) && ws.intervals.count(args.b);
  if (intervals)
  {
    auto const &a   = ws.intervals.at(args.a);
    auto const &b   = ws.intervals.at(args.b);
    auto const &pop = lookup(ws.intervals, args.population, "population interval");
    if (!covers(pop, unite(a, b)))
      throw UsageError("population '" + args.population + "' does not cover A u B");
    est = estimate_f(a, b, SamplePlan{pop, args.n, args.seed, mode});
    reference = (a.parts().size() == 1 && b.parts().size() == 1) ? interval_f_closed(a.parts()[0], b.parts()[0])
                                                                  : f_continuous(a, b);
  }
  else
  {
    auto const &a   = lookup(ws.sets, args.a, "set");
    auto const &b   = lookup(ws.sets, args.b, "set");
    auto const &pop = lookup(ws.sets, args.population, "population set");
    if (set_difference(set_union(a, b), pop).size() != 0)
      throw UsageError("population '" + args.population + "' does not cover A u B");
    est       = estimate_f(ws.metric, a, b, FiniteSamplePlan{pop, args.n, args.seed, mode});
    reference = average_metric(ws.metric, a, b);
  }
  out << "estimate " << format_value(est.value) << "\n";
  out << "sample_size " << est.sample_size << "\n";
  out << "size_a " << est.size_a << "\n";
  out << "size_b " << est.size_b << "\n";
  out << "reference " << format_value(reference) << "\n";
  if (reference != 0.0)
    out << "relative_error " << format_value(std::abs(est.value - reference) / std::abs(reference)) << "\n";
  else
    out << "absolute_error " << format_value(std::abs(est.value)) << "\n";
  return kExitOk;
}

}  // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Distances between sets built from a base metric", "setmetric"};
  app.require_subcommand(1);

  RawParams   raw;
  std::string workspace;
  std::string name_a;
  std::string name_b;

  auto *dist = app.add_subcommand("dist", "distance between two named objects");
  add_param_options(*dist, raw);
  dist->add_option("--workspace", workspace, "workspace JSON file")->required();
  dist->add_option("--a", name_a, "first name")->required();
  dist->add_option("--b", name_b, "second name")->required();

  std::vector<std::string> names;
  auto *matrix = app.add_subcommand("matrix", "CSV distance matrix over named objects");
  add_param_options(*matrix, raw);
  matrix->add_option("--workspace", workspace, "workspace JSON file")->required();
  matrix->add_option("names", names, "object names, in output order");

  AxiomArgs ax;
  auto     *axioms = app.add_subcommand("axioms", "check metric axioms on sampled triples");
  add_param_options(*axioms, raw);
  axioms->add_option("--workspace", ax.workspace, "draw triples from the workspace's named objects");
  axioms->add_flag("--random", ax.random, "draw random triples");
  axioms->add_option("--fixture", ax.fixture, "named triple family: e-counterexample");
  axioms->add_option("--n", ax.n, "number of triples")->capture_default_str();
  axioms->add_option("--seed", ax.seed, "seed")->capture_default_str();
  axioms->add_option("--tolerance", ax.tolerance, "absolute tolerance")->capture_default_str();
  axioms->add_flag("--json", ax.as_json, "print the report as JSON");
  axioms->add_option("--dim", ax.dim, "dimension of random points")->capture_default_str();
  axioms->add_option("--axiom-set", ax.axiom_set, "metric, semi, pseudo or partial");

  std::string   suite = "all";
  std::uint64_t verify_seed = 0;
  auto         *verify = app.add_subcommand("verify", "run identity and inequality suites");
  verify->add_option("--suite", suite, "identities, appendixA, appendixB, duality, interval or all")
      ->capture_default_str();
  verify->add_option("--seed", verify_seed, "seed")->capture_default_str();

  EstimateArgs est;
  auto        *estimate = app.add_subcommand("estimate", "sampling estimate of f");
  estimate->add_option("--workspace", est.workspace, "workspace JSON file")->required();
  estimate->add_option("--a", est.a, "first name")->required();
  estimate->add_option("--b", est.b, "second name")->required();
  estimate->add_option("--population", est.population, "population name")->required();
  estimate->add_option("--n", est.n, "sample size")->capture_default_str();
  estimate->add_option("--seed", est.seed, "seed")->capture_default_str();
  estimate->add_option("--mode", est.mode, "random or systematic")->capture_default_str();

  try
  {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  }
  catch (CLI::CallForHelp const &)
  {
    out << app.help();
    return kExitOk;
  }
  catch (CLI::ParseError const &e)
  {
    if (e.get_exit_code() == 0)
    {
      out << app.help();
      return kExitOk;
    }
    err << "setmetric: " << e.what() << "\n";
    return kExitUsage;
  }

  try
  {
    if (*dist)
      return cmd_dist(validate(raw), workspace, name_a, name_b, out);
    if (*matrix)
      return cmd_matrix(validate(raw), workspace, names, out);
    if (*axioms)
      return cmd_axioms(validate(raw), ax, out);
    if (*verify)
      return cmd_verify(suite, verify_seed, out);
    if (*estimate)
      return cmd_estimate(est, out);
  }
  catch (UsageError const &e)
  {
    err << "setmetric: " << e.what() << "\n";
    return kExitUsage;
  }
  catch (InvalidParameter const &e)
  {
    err << "setmetric: invalid parameter: " << e.what() << "\n";
    return kExitUsage;
  }
  catch (DomainError const &e)
  {
    err << "setmetric: domain error: " << e.what() << "\n";
    return kExitDomain;
  }
  catch (std::exception const &e)
  {
    err << "setmetric: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace setmetric::cli
