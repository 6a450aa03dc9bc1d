#pragma once

// File formats.
//
//   rack:   {"name": str, "elements": [str...], "table": [[int...]...], "kind": "rack"|"quandle"}
//   group:  {"name": str, "elements": [str...], "table": [[int...]...]}   (table[i][j] = i*j)
//   λ:      {"family": [{"factor": str, "kind": "sign"|"iota"|"table", ...}], "bound": "p/q"}
//
// λ entries by kind:
//   sign:  optional "scale": rational string (default "1")
//   iota:  "element": label of x0; either "indicator": k, or
//          "table": {"k": "p/q", ...} with optional "cutoff" (default max key),
//          "tail": "zero"|"sign" and "tail_value": rational string
//   table: "entries": [{"value": word over factor.element names, "lambda": "p/q"}]
//
// Factors not listed in "family" carry λ_s = 0. Rationals are "p/q" strings.

#include <cstddef>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rackqm/adjoint.hpp"
#include "rackqm/certify.hpp"
#include "rackqm/error.hpp"
#include "rackqm/finite_rack.hpp"
#include "rackqm/free_product.hpp"
#include "rackqm/group_table.hpp"
#include "rackqm/number.hpp"
#include "rackqm/quasimorphism.hpp"

namespace rackqm::io {

using json = nlohmann::json;

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw input_error("'" + path + "': " + e.what());
  }
}

namespace detail {

inline Table table_from_json(const json& j) {
  if (!j.is_array()) throw input_error("\"table\" must be an array of rows");
  Table t;
  for (const auto& row : j) {
    if (!row.is_array()) throw input_error("table row must be an array");
    std::vector<std::size_t> r;
    for (const auto& v : row) {
      if (!v.is_number_integer() || v.get<long long>() < 0) throw input_error("table entries must be nonnegative integers");
      r.push_back(v.get<std::size_t>());
    }
    t.push_back(std::move(r));
  }
  return t;
}

inline std::vector<std::string> labels_from_json(const json& j) {
  std::vector<std::string> out;
  if (j.is_null()) return out;
  if (!j.is_array()) throw input_error("\"elements\" must be an array of strings");
  for (const auto& v : j) {
    if (!v.is_string()) throw input_error("element labels must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw input_error("expected a rational string \"p/q\"");
}

inline Integer integer_from_json(const json& j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.get<long long>());
  throw input_error("expected an integer");
}

}  // namespace detail

inline FiniteRack rack_from_json(const json& j) {
  if (!j.is_object() || !j.contains("table")) throw input_error("rack file needs a \"table\"");
  rack_kind claim = rack_kind::rack;
  if (j.contains("kind")) {
    auto k = j.at("kind").get<std::string>();
    if (k == "quandle") claim = rack_kind::quandle;
    else if (k != "rack") throw input_error("\"kind\" must be \"rack\" or \"quandle\"");
  }
  return validate_rack(detail::table_from_json(j.at("table")),
                       detail::labels_from_json(j.value("elements", json())), j.value("name", std::string()), claim);
}

inline FiniteRack read_rack(const std::string& path) { return rack_from_json(read_json_file(path)); }

inline json rack_to_json(const FiniteRack& r) {
  return {{"name", r.name()},
          {"elements", r.labels()},
          {"table", r.table()},
          {"kind", r.is_quandle() ? "quandle" : "rack"}};
}

inline FiniteGroup group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("table")) throw input_error("group file needs a \"table\"");
  return FiniteGroup(detail::table_from_json(j.at("table")), detail::labels_from_json(j.value("elements", json())),
                     j.value("name", std::string()));
}

inline FiniteGroup read_group(const std::string& path) { return group_from_json(read_json_file(path)); }

inline json group_to_json(const FiniteGroup& g) {
  return {{"name", g.name()}, {"elements", g.labels()}, {"table", g.table()}};
}

// ---------------------------------------------------------------------------
// Parents

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

/// `free-rack:a,b`, `free-quandle:a,b`, `trivial:a=2,b=3`, or
/// `racks:a=FILE,b=FILE` (each file a trivial rack).
inline FreeProductRack parse_parent(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw input_error("parent spec must be KIND:LIST, got '" + spec + "'");
  std::string kind = spec.substr(0, colon);
  auto items = split(spec.substr(colon + 1), ',');
  if (kind == "free-rack") return FreeProductRack::free_rack(items);
  if (kind == "free-quandle") return FreeProductRack::free_quandle(items);
  if (kind == "trivial" || kind == "racks") {
    std::vector<Factor> factors;
    for (const auto& it : items) {
      auto eq = it.find('=');
      if (eq == std::string::npos) throw input_error("expected name=value in '" + it + "'");
      std::string name = it.substr(0, eq), value = it.substr(eq + 1);
      if (kind == "trivial") {
        factors.push_back({name, AdjointModel::trivial_rack_model(parse_integer(value).convert_to<std::size_t>())});
      } else {
        factors.push_back({name, model_for(read_rack(value))});
      }
    }
    return FreeProductRack(std::move(factors));
  }
  throw input_error("unknown parent kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// λ families

namespace detail {

inline FactorValue factor_value(const FreeProductRack& parent, std::size_t factor, const std::string& text) {
  FactorValue v;
  for (const auto& s : parent.parse_syllables(text)) {
    if (s.factor != factor) throw input_error("value '" + text + "' leaves factor '" + parent.factor(factor).name + "'");
    v *= s.value;
  }
  return v;
}

inline Integer element_index(const FreeProductRack& parent, std::size_t factor, const std::string& label) {
  const auto& labels = parent.factor(factor).model.labels();
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return Integer(i);
  throw input_error("unknown element '" + label + "' of factor '" + parent.factor(factor).name + "'");
}

}  // namespace detail

inline LambdaFamily lambda_from_json(const json& j, const FreeProductRack& parent) {
  if (!j.is_object() || !j.contains("family") || !j.at("family").is_array()) {
    throw input_error("λ file needs a \"family\" array");
  }
  LambdaFamily lambda(parent.factor_count());
  std::vector<bool> seen(parent.factor_count(), false);
  for (const auto& e : j.at("family")) {
    std::size_t s = parent.factor_index(e.at("factor").get<std::string>());
    if (seen[s]) throw input_error("factor '" + parent.factor(s).name + "' listed twice");
    seen[s] = true;
    auto kind = e.at("kind").get<std::string>();
    if (kind == "sign") {
      lambda.set(s, LambdaComponent::sign(e.contains("scale") ? detail::rational_from_json(e.at("scale")) : Rational(1)));
    } else if (kind == "iota") {
      Integer x0 = detail::element_index(parent, s, e.value("element", std::string("0")));
      OddFunction sigma;
      if (e.contains("indicator")) {
        sigma = OddFunction::indicator(detail::integer_from_json(e.at("indicator")));
      } else {
        std::map<Integer, Rational> table;
        Integer cutoff = 0;
        const json entries = e.value("table", json::object());
        for (const auto& item : entries.items()) {
          Integer key = parse_integer(item.key());
          table[key] = detail::rational_from_json(item.value());
          cutoff = std::max(cutoff, key);
        }
        if (e.contains("cutoff")) cutoff = detail::integer_from_json(e.at("cutoff"));
        auto tail = e.value("tail", std::string("zero"));
        if (tail != "zero" && tail != "sign") throw input_error("\"tail\" must be \"zero\" or \"sign\"");
        Rational tv = e.contains("tail_value") ? detail::rational_from_json(e.at("tail_value")) : Rational(0);
        sigma = OddFunction(std::move(table), cutoff,
                            tail == "sign" ? OddFunction::tail_rule::constant_sign : OddFunction::tail_rule::zero, tv);
      }
      auto gen = parent.factor(s).model.embed(x0).as_generator_power();
      lambda.set(s, LambdaComponent::iota(gen->first, std::move(sigma)));
    } else if (kind == "table") {
      std::vector<std::pair<FactorValue, Rational>> entries;
      for (const auto& row : e.value("entries", json::array())) {
        entries.emplace_back(detail::factor_value(parent, s, row.at("value").get<std::string>()),
                             detail::rational_from_json(row.at("lambda")));
      }
      lambda.set(s, LambdaComponent::table(entries));
    } else {
      throw input_error("unknown λ kind '" + kind + "'");
    }
  }
  if (j.contains("bound")) lambda.declare_bound(detail::rational_from_json(j.at("bound")));
  return lambda;
}

inline LambdaFamily read_lambda(const std::string& path, const FreeProductRack& parent) {
  try {
    return lambda_from_json(read_json_file(path), parent);
  } catch (const json::exception& e) {
    throw input_error("'" + path + "': " + e.what());
  }
}

inline json lambda_to_json(const LambdaFamily& lambda, const FreeProductRack& parent) {
  json fam = json::array();
  for (std::size_t s = 0; s < lambda.size(); ++s) {
    const auto& c = lambda.component(s);
    const auto& name = parent.factor(s).name;
    switch (c.type()) {
      case LambdaComponent::kind::zero: break;
      case LambdaComponent::kind::sign:
        fam.push_back({{"factor", name}, {"kind", "sign"}, {"scale", to_string(c.scale())}});
        break;
      case LambdaComponent::kind::iota: {
        json table = json::object();
        for (const auto& [k, v] : c.sigma().table()) table[k.str()] = to_string(v);
        fam.push_back({{"factor", name},
                       {"kind", "iota"},
                       {"element", parent.factor(s).model.labels()[c.generator()]},
                       {"table", table},
                       {"cutoff", c.sigma().cutoff().str()},
                       {"tail", c.sigma().rule() == OddFunction::tail_rule::zero ? "zero" : "sign"},
                       {"tail_value", to_string(c.sigma().tail_value())}});
        break;
      }
      case LambdaComponent::kind::table: {
        json rows = json::array();
        for (const auto& [g, v] : c.entries())
          rows.push_back({{"value", parent.factor(s).model.normal_form(g, name)}, {"lambda", to_string(v)}});
        fam.push_back({{"factor", name}, {"kind", "table"}, {"entries", rows}});
        break;
      }
    }
  }
  return {{"family", fam}, {"bound", to_string(lambda.bound())}};
}

// ---------------------------------------------------------------------------
// Certificates

/// {"rank", "n", "family", "witnesses", "matrix", "verdict"}; each witness
/// is (base, period, power): the element (base, period^power).
inline json certificate_to_json(const IndependenceCertificate& c, const FreeProductRack& parent) {
  json fam = json::array();
  for (const auto& f : c.family) {
    const auto& factor = parent.factor(f.factor);
    fam.push_back({{"factor", factor.name},
                   {"element", factor.model.labels()[f.element.convert_to<std::size_t>()]},
                   {"kind", "iota"},
                   {"indicator", f.index.str()}});
  }
  json wit = json::array();
  for (const auto& w : c.witnesses) {
    const auto& s0 = parent.factor(0);
    const auto& t = parent.factor(1);
    std::string period = render_syllable(generator_name(s0.name, s0.model.labels()[0]), w.j) + " " +
                         generator_name(t.name, t.model.labels()[0]);
    wit.push_back({{"j", w.j.str()},
                   {"base", generator_name(t.name, t.model.labels()[0])},
                   {"period", period},
                   {"power", c.n}});
  }
  json mat = json::array();
  for (const auto& row : c.matrix) {
    json r = json::array();
    for (const auto& v : row) r.push_back(to_string(v));
    mat.push_back(r);
  }
  return {{"rank", c.rank}, {"n", c.n}, {"family", fam}, {"witnesses", wit}, {"matrix", mat}, {"verdict", c.verdict}};
}

}  // namespace rackqm::io
