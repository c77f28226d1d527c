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

#include "workspace.hpp"

#include <fstream>
#include <set>

#include "setmetric/error.hpp"

namespace setmetric::cli {

using nlohmann::json;

namespace {

std::string id_of(json const &v)
{
  if (v.is_string())
    return v.get<std::string>();
  if (v.is_number())
    return v.dump();
  throw UsageError("element ids must be strings or numbers, got " + v.dump());
}

json const *section(json const &doc, char const *key)
{
  auto it = doc.find(key);
  if (it == doc.end() || it->is_null())
    return nullptr;
  if (!it->is_object())
    throw UsageError(std::string("workspace \"") + key + "\" must be an object");
  return &*it;
}

void collect_nested_ids(json const &v, std::set<std::string> &out)
{
  if (v.is_array())
  {
    for (auto const &c : v)
      collect_nested_ids(c, out);
  }
  else
  {
    out.insert(id_of(v));
  }
}

NestedSet parse_nested(json const &v, ElementRegistry const &reg, std::string const &where)
{
  if (!v.is_array())
    return NestedSet::leaf(reg.index_of(id_of(v)));
  if (v.empty())
    throw UsageError(where + ": empty collection");
  std::vector<NestedSet> children;
  for (auto const &c : v)
    children.push_back(parse_nested(c, reg, where));
  return NestedSet::collection(std::move(children));
}

BaseMetric parse_metric(json const &m, RegistryPtr const &reg)
{
  if (!m.is_object() || !m.contains("kind"))
    throw UsageError("metric must be an object with a \"kind\"");
  auto const kind = m.at("kind").get<std::string>();
  if (kind == "discrete")
    return BaseMetric::discrete(m.value("lambda", 1.0));
  if (kind == "euclidean")
    return BaseMetric::euclidean();
  if (kind == "lp")
  {
    auto const &p = m.at("p");
    double const pv = p.is_string() && p.get<std::string>() == "inf" ? std::numeric_limits<double>::infinity()
                                                                      : p.get<double>();
    return BaseMetric::lp(pv);
  }
  if (kind == "matrix")
  {
    std::vector<std::string> ids;
    for (auto const &v : m.at("ids"))
      ids.push_back(id_of(v));
    auto table = m.at("table").get<std::vector<std::vector<double>>>();
    return BaseMetric::matrix(MatrixMetric(reg, ids, std::move(table), m.value("pseudo", false)));
  }
  throw UsageError("unknown metric kind '" + kind + "'");
}

}  // namespace

Workspace parse_workspace(json const &doc)
{
  if (!doc.is_object())
    throw UsageError("workspace must be a JSON object");
  try
  {
    auto reg = std::make_shared<ElementRegistry>();
    auto const *elements = doc.contains("elements") ? &doc.at("elements") : nullptr;
    if (elements && elements->is_object())
    {
      for (auto const &[id, payload] : elements->items())
      {
        if (payload.is_null())
          reg->add(id);
        else
          reg->add(id, payload.get<std::vector<double>>());
      }
    }
    else if (elements && elements->is_array())
    {
      for (auto const &v : *elements)
        reg->add(id_of(v));
    }
    else if (elements && !elements->is_null())
    {
      throw UsageError("workspace \"elements\" must be an object or an array");
    }
    else
    {
      std::set<std::string> seen;
      if (auto const *s = section(doc, "sets"))
        for (auto const &[name, ids] : s->items())
          collect_nested_ids(ids, seen);
      if (auto const *s = section(doc, "fuzzy"))
        for (auto const &[name, grades] : s->items())
          for (auto const &[id, m] : grades.items())
            seen.insert(id);
      if (auto const *s = section(doc, "nested"))
        for (auto const &[name, v] : s->items())
          collect_nested_ids(v, seen);
      if (doc.contains("metric") && doc.at("metric").contains("ids"))
        for (auto const &v : doc.at("metric").at("ids"))
          seen.insert(id_of(v));
      for (auto const &id : seen)
        reg->add(id);
    }

    Workspace ws;
    ws.registry = reg;
    if (doc.contains("metric"))
      ws.metric = parse_metric(doc.at("metric"), ws.registry);

    if (auto const *s = section(doc, "sets"))
    {
      for (auto const &[name, ids] : s->items())
      {
        if (!ids.is_array())
          throw UsageError("set '" + name + "' must be an array of ids");
        std::vector<std::string> names;
        for (auto const &v : ids)
          names.push_back(id_of(v));
        ws.sets.emplace(name, FiniteSet::from_ids(ws.registry, names));
      }
    }
    if (auto const *s = section(doc, "intervals"))
    {
      for (auto const &[name, parts] : s->items())
      {
        std::vector<Interval> iv;
        for (auto const &p : parts)
        {
          if (!p.is_array() || p.size() != 2)
            throw UsageError("interval '" + name + "' parts must be [lo, hi] pairs");
          iv.push_back({p[0].get<double>(), p[1].get<double>()});
        }
        ws.intervals.emplace(name, IntervalUnion(std::move(iv)));
      }
    }
    if (auto const *s = section(doc, "fuzzy"))
    {
      for (auto const &[name, grades] : s->items())
      {
        std::vector<std::pair<ElementIndex, double>> g;
        for (auto const &[id, m] : grades.items())
          g.emplace_back(reg->index_of(id), m.get<double>());
        ws.fuzzy.emplace(name, FuzzySet(ws.registry, std::move(g)));
      }
    }
    if (auto const *s = section(doc, "nested"))
    {
      for (auto const &[name, v] : s->items())
        ws.nested.emplace(name, parse_nested(v, *reg, "nested set '" + name + "'"));
    }
    return ws;
  }
  catch (UsageError const &)
  {
    throw;
  }
  catch (json::exception const &e)
  {
    throw UsageError(std::string("workspace: ") + e.what());
  }
  catch (std::exception const &e)
  {
    throw UsageError(std::string("workspace: ") + e.what());
  }
}

Workspace load_workspace(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot open workspace '" + path + "'");
  json doc;
  try
  {
    doc = json::parse(in);
  }
  catch (json::exception const &e)
  {
    throw UsageError("workspace '" + path + "': " + e.what());
  }
  return parse_workspace(doc);
}

}  // namespace setmetric::cli
