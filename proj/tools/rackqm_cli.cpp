// rackqm: command-line front end.
//
// Exit codes: 0 success, 1 violated invariant, 2 input error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rackqm/rackqm.hpp"

namespace {

using namespace rackqm;
using io::json;

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_input = 2;

const char* default_parent = "free-rack:a,b";

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string indices(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

json rational_json(const Rational& v) { return to_string(v); }

// ---------------------------------------------------------------------------
// rack

struct RackArgs {
  std::string file;
  long degree = 2;
  bool quandle = false;
  bool dump = false;
  bool json = false;
  std::string gens;
  std::string element;
};

std::vector<std::size_t> parse_labels(const FiniteRack& r, const std::string& list) {
  std::vector<std::size_t> out;
  for (const auto& l : io::split(list, ',')) {
    auto i = r.index_of(l);
    if (!i) throw input_error("unknown element '" + l + "'");
    out.push_back(*i);
  }
  return out;
}

int rack_check(const RackArgs& a) {
  try {
    auto r = io::read_rack(a.file);
    if (a.json) {
      emit({{"valid", true}, {"name", r.name()}, {"kind", r.is_quandle() ? "quandle" : "rack"}, {"size", r.size()}});
    } else {
      std::cout << "valid " << (r.is_quandle() ? "quandle" : "rack") << " " << r.name() << " (" << r.size()
                << " elements)\n";
    }
    return exit_ok;
  } catch (const axiom_violation& e) {
    if (a.json) emit({{"valid", false}, {"axiom", axiom_name(e.axiom())}, {"witness", e.witness()}, {"detail", e.what()}});
    std::cerr << "invalid: " << e.what() << " witness " << indices(e.witness()) << '\n';
    return exit_violation;
  }
}

int rack_components(const RackArgs& a) {
  auto r = io::read_rack(a.file);
  auto c = components(r);
  if (a.json) {
    emit({{"count", c.count}, {"component_of", c.component_of}, {"sizes", c.sizes()}});
    return exit_ok;
  }
  std::cout << "components: " << c.count << '\n';
  for (std::size_t i = 0; i < r.size(); ++i) std::cout << r.labels()[i] << '\t' << c.component_of[i] << '\n';
  return exit_ok;
}

int rack_cohomology(const RackArgs& a) {
  auto r = io::read_rack(a.file);
  if (a.dump) {
    for (long n = 0; n <= a.degree; ++n) std::cout << dump_matrix(coboundary(r, n));
    return exit_ok;
  }
  auto dims = cohomology_dims(r, a.degree, a.quandle);
  if (a.json) {
    emit({{"rack", r.name()}, {"mode", a.quandle ? "quandle" : "rack"}, {"dims", dims}});
    return exit_ok;
  }
  for (std::size_t k = 0; k < dims.size(); ++k) std::cout << "H^" << k << "\t" << dims[k] << '\n';
  return exit_ok;
}

int rack_presentation(const RackArgs& a) {
  std::cout << export_presentation(presentation(io::read_rack(a.file)));
  return exit_ok;
}

int rack_express(const RackArgs& a) {
  auto r = io::read_rack(a.file);
  auto gens = parse_labels(r, a.gens);
  auto x = parse_labels(r, a.element);
  if (x.size() != 1) throw input_error("--element takes one label");
  auto w = express_generator(r, gens, x[0]);
  bool ok = verify_expression(r, gens, x[0], w, default_prefix(r));
  std::cout << render(w) << '\n';
  return ok ? exit_ok : exit_violation;
}

// ---------------------------------------------------------------------------
// word

int word_reduce(const std::string& text, bool abelian) {
  std::cout << (abelian ? render(parse_abelian_word(text)) : render(parse_word(text))) << '\n';
  return exit_ok;
}

// ---------------------------------------------------------------------------
// fp

struct FpArgs {
  std::string parent = default_parent;
  std::string p, q;
  bool inverse = false;
  bool json = false;
};

int fp_op(const FpArgs& a) {
  auto P = io::parse_parent(a.parent);
  auto r = P.op(P.parse_element(a.p), P.parse_element(a.q), a.inverse ? -1 : 1);
  if (a.json) {
    emit({{"result", P.render(r)}});
  } else {
    std::cout << P.render(r) << '\n';
  }
  return exit_ok;
}

int fp_equal(const FpArgs& a) {
  auto P = io::parse_parent(a.parent);
  bool eq = P.equal(P.parse_element(a.p), P.parse_element(a.q));
  if (a.json) {
    emit({{"equal", eq}});
  } else {
    std::cout << (eq ? "true" : "false") << '\n';
  }
  return exit_ok;
}

int fp_conjugate(const FpArgs& a) {
  auto P = io::parse_parent(a.parent);
  std::cout << render(P.conjugate_form(P.parse_element(a.p))) << '\n';
  return exit_ok;
}

// ---------------------------------------------------------------------------
// qm

struct QmArgs {
  std::string parent = default_parent;
  std::string lambda;
  std::string element;
  bool group = false;
  bool rack = false;
  SamplerConfig sampler;
  long max_letters = 6;
  long max_exhaustive_exponent = 3;
  std::vector<std::size_t> ns{1, 10, 100};
  std::string word, target, bound;
  std::string exponent = "1024";
  unsigned doublings = 0;
  bool hom = false;
  std::vector<std::string> groups;
  bool json = false;
};

int qm_eval(const QmArgs& a) {
  auto P = io::parse_parent(a.parent);
  auto lambda = io::read_lambda(a.lambda, P);
  auto p = P.parse_element(a.element);
  Rational v = rack_qm(lambda, p);
  if (a.json) {
    emit({{"element", P.render(p)}, {"value", rational_json(v)}});
  } else {
    std::cout << to_display(v) << '\n';
  }
  return exit_ok;
}

int qm_defect(const QmArgs& a) {
  auto P = io::parse_parent(a.parent);
  auto lambda = io::read_lambda(a.lambda, P);
  if (a.group) {
    GroupDefectConfig cfg;
    cfg.max_letters = a.max_letters;
    cfg.max_exponent = a.max_exhaustive_exponent;
    cfg.sampling = a.sampler;
    auto rep = group_defect_estimate(lambda, P, cfg);
    Rational bound = 3 * lambda.bound();
    bool ok = rep.max_defect <= bound;
    if (a.json) {
      emit({{"mode", "group"},
            {"max_defect", rational_json(rep.max_defect)},
            {"bound", rational_json(bound)},
            {"words", rep.words},
            {"pairs", rep.pairs},
            {"g", P.render(rep.g)},
            {"h", P.render(rep.h)},
            {"within_bound", ok}});
    } else {
      std::cout << "mode          group\n"
                << "words         " << rep.words << "\n"
                << "pairs         " << rep.pairs << "\n"
                << "max defect    " << to_display(rep.max_defect) << "\n"
                << "bound 3|l|    " << to_display(bound) << "\n"
                << "witness g     " << P.render(rep.g) << "\n"
                << "witness h     " << P.render(rep.h) << "\n";
    }
    return ok ? exit_ok : exit_violation;
  }
  auto rep = rack_defect_estimate(lambda, P, a.sampler);
  if (a.json) {
    emit({{"mode", "rack"},
          {"max_observed", rational_json(rep.max_observed)},
          {"bound", rational_json(rep.bound)},
          {"pairs", rep.pairs},
          {"seed", a.sampler.seed},
          {"p", P.render(rep.p)},
          {"q", P.render(rep.q)},
          {"within_bound", rep.within_bound()}});
  } else {
    std::cout << "mode          rack\n"
              << "seed          " << a.sampler.seed << "\n"
              << "pairs         " << rep.pairs << "\n"
              << "max observed  " << to_display(rep.max_observed) << "\n"
              << "bound 4|l|    " << to_display(rep.bound) << "\n"
              << "witness p     " << P.render(rep.p) << "\n"
              << "witness q     " << P.render(rep.q) << "\n";
  }
  return rep.within_bound() ? exit_ok : exit_violation;
}

int qm_witness(const QmArgs& a) {
  auto P = io::parse_parent(a.parent);
  auto lambda = io::read_lambda(a.lambda, P);
  auto rep = boundedness_refutation(lambda, P, a.ns);
  const auto& w = rep.witness;
  const auto& s0 = P.factor(w.s0);
  const auto& t = P.factor(w.t);
  std::string g0 = s0.model.normal_form(w.g0, s0.name);
  std::string x = generator_name(t.name, t.model.labels()[w.x.convert_to<std::size_t>()]);
  if (a.json) {
    json table = json::object();
    for (const auto& [n, v] : rep.table) table[std::to_string(n)] = rational_json(v);
    emit({{"g0", g0},
          {"x", x},
          {"eps", w.eps},
          {"slope", rational_json(w.slope)},
          {"factor_orbit_sum", rep.factor_orbit_sum},
          {"table", table},
          {"linear", rep.linear}});
  } else {
    std::cout << "g0            " << g0 << "\n"
              << "x             " << x << "\n"
              << "eps           " << w.eps << "\n"
              << "slope         " << to_display(w.slope) << "\n"
              << "orbit sum     " << rep.factor_orbit_sum << "\n"
              << "n\tvalue\n";
    for (const auto& [n, v] : rep.table) std::cout << n << '\t' << to_display(v) << '\n';
  }
  return rep.linear ? exit_ok : exit_violation;
}

int qm_homogenize(const QmArgs& a) {
  auto g = parse_word(a.target);
  auto phi = a.hom ? exponent_sum_hom({}) : brooks(parse_word(a.word));
  Rational d = parse_rational(a.bound);
  std::vector<HomogeneousEstimate> seq;
  if (a.doublings > 0) {
    seq = homogenize_doubling(phi, g, d, Rational(0), a.doublings);
  } else {
    seq.push_back(homogenize(phi, g, d, parse_integer(a.exponent)));
  }
  bool chained = true;
  for (std::size_t i = 1; i < seq.size(); ++i) chained = chained && seq[i - 1].intersects(seq[i]);
  if (a.json) {
    json rows = json::array();
    for (const auto& e : seq)
      rows.push_back({{"N", e.exponent.str()}, {"center", rational_json(e.center)}, {"radius", rational_json(e.radius)}});
    emit({{"phi", phi.description}, {"target", render(g)}, {"estimates", rows}, {"intersecting", chained}});
  } else {
    std::cout << "phi           " << phi.description << "\n"
              << "target        " << render(g) << "\n"
              << "N\tcenter\tradius\n";
    for (const auto& e : seq) std::cout << e.exponent << '\t' << to_display(e.center) << '\t' << to_display(e.radius) << '\n';
  }
  return chained ? exit_ok : exit_violation;
}

int qm_v0dim(const QmArgs& a) {
  std::vector<FiniteGroup> groups;
  for (const auto& f : a.groups) groups.push_back(io::read_group(f));
  auto d = v0_dim(groups);
  auto check = v0_dim_by_elimination(groups);
  if (a.json) {
    emit({{"dim", d}, {"by_elimination", check}});
  } else {
    std::cout << d << '\n';
  }
  if (d != check) {
    std::cerr << "closed form " << d << " disagrees with elimination " << check << '\n';
    return exit_violation;
  }
  return exit_ok;
}

// ---------------------------------------------------------------------------
// certify

struct CertifyArgs {
  std::string parent = default_parent;
  std::size_t rank = 3;
  std::size_t n = 100;
  bool json = false;
};

int certify_independence(const CertifyArgs& a) {
  auto P = io::parse_parent(a.parent);
  auto c = independence_certificate(P, a.rank, a.n);
  bool ok = c.verdict == c.rank && c.is_identity();
  if (a.json) {
    emit(io::certificate_to_json(c, P));
  } else {
    std::cout << "matrix (phi(w_j(n))/n, n = " << c.n << ")\n";
    for (const auto& row : c.matrix) {
      for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << to_display(row[j]);
      std::cout << '\n';
    }
    std::cout << "rank = " << c.verdict << '\n';
  }
  return ok ? exit_ok : exit_violation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Racks, free products and their quasimorphisms"};
  app.require_subcommand(1);
  int code = exit_ok;
  auto run = [&code](auto f) {
    return [f, &code]() { code = f(); };
  };

  RackArgs ra;
  auto* rack = app.add_subcommand("rack", "finite racks from JSON tables")->require_subcommand(1);
  {
    auto* c = rack->add_subcommand("check", "validate the rack axioms");
    c->add_option("file", ra.file)->required();
    c->add_flag("--json", ra.json);
    c->callback(run([&] { return rack_check(ra); }));

    auto* comp = rack->add_subcommand("components", "orbits of the inner action");
    comp->add_option("file", ra.file)->required();
    comp->add_flag("--json", ra.json);
    comp->callback(run([&] { return rack_components(ra); }));

    auto* coh = rack->add_subcommand("cohomology", "dimensions of H^k over Q");
    coh->add_option("file", ra.file)->required();
    coh->add_option("--degree", ra.degree, "max degree")->capture_default_str();
    coh->add_flag("--quandle", ra.quandle, "non-degenerate subcomplex");
    coh->add_flag("--dump-matrix", ra.dump, "print delta^0..delta^degree");
    coh->add_flag("--json", ra.json);
    coh->callback(run([&] { return rack_cohomology(ra); }));

    auto* pres = rack->add_subcommand("presentation", "adjoint group presentation");
    pres->add_option("file", ra.file)->required();
    pres->callback(run([&] { return rack_presentation(ra); }));

    auto* ex = rack->add_subcommand("express", "write e_x as a word in generators");
    ex->add_option("file", ra.file)->required();
    ex->add_option("--gens", ra.gens, "comma-separated labels")->required();
    ex->add_option("--element", ra.element)->required();
    ex->callback(run([&] { return rack_express(ra); }));
  }

  std::string word_text;
  bool abelian = false;
  auto* word = app.add_subcommand("word", "free group words")->require_subcommand(1);
  {
    auto* red = word->add_subcommand("reduce", "print the reduced form");
    red->add_option("word", word_text)->required();
    red->add_flag("--abelian", abelian, "reduce in the free abelian group");
    red->callback(run([&] { return word_reduce(word_text, abelian); }));
  }

  FpArgs fa;
  auto* fp = app.add_subcommand("fp", "free products of racks")->require_subcommand(1);
  {
    auto* op = fp->add_subcommand("op", "P ◁ Q");
    op->add_option("p", fa.p)->required();
    op->add_option("q", fa.q)->required();
    op->add_flag("--inverse", fa.inverse, "use the inverse operation");
    op->add_option("--parent", fa.parent)->capture_default_str();
    op->add_flag("--json", fa.json);
    op->callback(run([&] { return fp_op(fa); }));

    auto* eq = fp->add_subcommand("equal", "compare canonical forms");
    eq->add_option("p", fa.p)->required();
    eq->add_option("q", fa.q)->required();
    eq->add_option("--parent", fa.parent)->capture_default_str();
    eq->add_flag("--json", fa.json);
    eq->callback(run([&] { return fp_equal(fa); }));

    auto* cj = fp->add_subcommand("conjugate", "free quandle element as g^-1 s g");
    cj->add_option("p", fa.p)->required();
    cj->add_option("--parent", fa.parent)->capture_default_str();
    cj->callback(run([&] { return fp_conjugate(fa); }));
  }

  QmArgs qa;
  auto* qm = app.add_subcommand("qm", "quasimorphisms")->require_subcommand(1);
  {
    auto add_sampler = [&](CLI::App* c) {
      c->add_option("--seed", qa.sampler.seed)->capture_default_str();
      c->add_option("--samples", qa.sampler.samples)->capture_default_str();
      c->add_option("--max-syllables", qa.sampler.max_syllables)->capture_default_str();
      c->add_option("--max-exponent", qa.sampler.max_exponent)->capture_default_str();
    };

    auto* ev = qm->add_subcommand("eval", "rack quasimorphism value");
    ev->add_option("lambda", qa.lambda)->required();
    ev->add_option("element", qa.element)->required();
    ev->add_option("--parent", qa.parent)->capture_default_str();
    ev->add_flag("--json", qa.json);
    ev->callback(run([&] { return qm_eval(qa); }));

    auto* df = qm->add_subcommand("defect", "observed defect against the bound");
    df->add_option("lambda", qa.lambda)->required();
    auto* g = df->add_flag("--group", qa.group, "Rolli group defect (exhaustive + sampled)");
    auto* r = df->add_flag("--rack", qa.rack, "rack defect (sampled; default)");
    g->excludes(r);
    df->add_option("--parent", qa.parent)->capture_default_str();
    df->add_option("--max-letters", qa.max_letters, "exhaustive budget")->capture_default_str();
    df->add_option("--exhaustive-exponent", qa.max_exhaustive_exponent)->capture_default_str();
    add_sampler(df);
    df->add_flag("--json", qa.json);
    df->callback(run([&] { return qm_defect(qa); }));

    auto* wi = qm->add_subcommand("witness", "linear growth along a reduced family");
    wi->add_option("lambda", qa.lambda)->required();
    wi->add_option("--parent", qa.parent)->capture_default_str();
    wi->add_option("--n", qa.ns, "exponents to tabulate")->capture_default_str();
    wi->add_flag("--json", qa.json);
    wi->callback(run([&] { return qm_witness(qa); }));

    auto* ho = qm->add_subcommand("homogenize", "interval for lim phi(g^N)/N");
    auto* w = ho->add_option("--word", qa.word, "Brooks word");
    auto* h = ho->add_flag("--hom", qa.hom, "exponent-sum homomorphism instead");
    w->excludes(h);
    ho->add_option("--target", qa.target)->required();
    ho->add_option("--defect-bound", qa.bound)->required();
    ho->add_option("--exponent", qa.exponent, "N")->capture_default_str();
    ho->add_option("--doublings", qa.doublings, "tabulate N = 1, 2, ..., 2^k");
    ho->add_flag("--json", qa.json);
    ho->callback(run([&] {
      if (qa.word.empty() && !qa.hom) throw input_error("need --word or --hom");
      return qm_homogenize(qa);
    }));

    auto* v0 = qm->add_subcommand("v0dim", "dim V0 for finite factor groups");
    v0->add_option("groups", qa.groups)->required();
    v0->add_flag("--json", qa.json);
    v0->callback(run([&] { return qm_v0dim(qa); }));
  }

  CertifyArgs ca;
  auto* certify = app.add_subcommand("certify", "independence certificates")->require_subcommand(1);
  {
    auto* ind = certify->add_subcommand("independence", "rank-k certificate");
    ind->add_option("--rank", ca.rank)->required();
    ind->add_option("--n", ca.n)->required();
    ind->add_option("--parent", ca.parent)->capture_default_str();
    ind->add_flag("--json", ca.json);
    ind->callback(run([&] { return certify_independence(ca); }));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_input;
  } catch (const invariant_violation& e) {
    std::cerr << "violated: " << e.what() << '\n';
    return exit_violation;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return exit_input;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
  return code;
}
