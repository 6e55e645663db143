#include "cudim/cli.hpp"

#include "cudim/axioms.hpp"
#include "cudim/catalog.hpp"
#include "cudim/constructions.hpp"
#include "cudim/dimension.hpp"
#include "cudim/spaces.hpp"
#include "cudim/structure.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <ostream>

namespace cudim {

namespace {

using Json = nlohmann::ordered_json;

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

struct Subject {
  std::string kind;  // catalog, presentation, space, chain, retract, none
  std::string name;
  std::optional<AnySemigroup> semigroup;
  std::optional<FinSpace> space;
  // retract inputs
  std::optional<SymbolicSemigroup> s, t;
  std::optional<RetractPair> pair;
};

Json names_of(const FinitePresentation& s, const std::vector<ElementId>& xs) {
  Json a = Json::array();
  for (auto x : xs) a.push_back(s.name(x));
  return a;
}

Json names_of(const SymbolicSemigroup& s, const std::vector<SymbolicElement>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(s.format(x));
  return a;
}

template <class S, class E>
Json witness_json(const S& s, const Witness<E>& w) {
  Json a = Json::array();
  for (const auto& row : w) a.push_back(names_of(s, row));
  return a;
}

template <class S, class E>
Json instance_json(const S& s, const Instance<E>& inst) {
  return Json{{"x_prime", names_of(s, {inst.x_prime})[0]},
              {"x", names_of(s, {inst.x})[0]},
              {"ys", names_of(s, inst.ys)}};
}

Json flag_json(const Flag& f) {
  return Json{{"value", f.value}, {"exact", f.exact}, {"depth", f.depth}};
}

template <class S, class E>
Json axiom_json(const S& s, const AxiomVerdict<E>& v) {
  Json j{{"axiom", to_string(v.axiom)}, {"holds", v.holds}, {"exact", v.exact}};
  if (!v.holds) j["counterexample"] = names_of(s, v.counterexample);
  j["universe_size"] = v.universe_size;
  j["pool_size"] = v.pool_size;
  return j;
}

template <class S, class E>
Json verdict_json(const S& s, const BoundedVerdict<E>& v) {
  Json j{{"status", to_string(v.status)}, {"exact", v.exact}};
  if (!v.tuple.empty()) j["tuple"] = names_of(s, v.tuple);
  if (!v.reason.empty()) j["reason"] = v.reason;
  j["depth"] = v.depth;
  j["slack"] = v.slack;
  j["r_max"] = v.r_max;
  return j;
}

[[noreturn]] void input_error(const std::string& what) {
  throw InvalidInput("invalid-parameters", what);
}

std::size_t parse_count(const std::string& s, const std::string& task) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    input_error("task '" + task + "': '" + s + "' is not a count");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("invalid-parameters", "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidInput("invalid-parameters", path + ": " + e.what());
  }
}

RawPresentation raw_of(const Json& j) {
  RawPresentation raw;
  try {
    raw.size = j.at("size").get<std::size_t>();
    raw.add = j.at("add").get<std::vector<std::vector<std::int64_t>>>();
    raw.leq = j.at("leq").get<std::vector<std::vector<int>>>();
    if (j.contains("names")) raw.names = j.at("names").get<std::vector<std::string>>();
  } catch (const Json::exception& e) {
    throw InvalidInput("invalid-parameters", std::string("presentation: ") + e.what());
  }
  return raw;
}

FinSpace space_of(const Json& j) {
  try {
    return FinSpace::make(j.at("points").get<std::vector<std::string>>(),
                          j.at("opens").get<std::vector<std::vector<std::string>>>(),
                          j.value("strict", false));
  } catch (const Json::exception& e) {
    throw InvalidInput("invalid-space", e.what());
  }
}

// A retract side: a catalog key or an inline presentation.
SymbolicSemigroup side_of(const Json& j, const std::string& label) {
  if (j.is_string()) {
    auto s = make(j.get<std::string>());
    if (auto* f = std::get_if<FinitePresentation>(&s)) return as_symbolic(*f, j.get<std::string>());
    return std::get<SymbolicSemigroup>(s);
  }
  return as_symbolic(validate_presentation(raw_of(j)), label);
}

PointMap map_of(const Json& j) {
  if (j.is_string()) {
    auto name = j.get<std::string>();
    auto p = soft_retract_pair();
    if (name == "soft-inclusion") return p.iota;
    if (name == "soft-retraction") return p.sigma;
    input_error("unknown morphism '" + name + "'");
  }
  try {
    return index_map(j.get<std::vector<std::size_t>>());
  } catch (const Json::exception& e) {
    throw InvalidInput("invalid-map", e.what());
  }
}

Subject load(const JobSpec& job, Json& params) {
  Subject subj;
  if (job.catalog && job.input) input_error("--catalog and --input are exclusive");
  if (job.catalog) {
    subj.kind = "catalog";
    subj.name = *job.catalog;
    subj.semigroup = make(*job.catalog);
    return subj;
  }
  if (!job.input) {
    subj.kind = "none";
    return subj;
  }
  Json doc = read_json(*job.input);
  subj.name = doc.value("name", *job.input);
  if (doc.contains("presentation")) {
    subj.kind = "presentation";
    subj.semigroup = validate_presentation(raw_of(doc["presentation"]));
  } else if (doc.contains("space")) {
    subj.kind = "space";
    subj.space = space_of(doc["space"]);
    std::size_t cap = doc.value("cap", std::size_t{2});
    std::string variant = doc.value("variant", std::string("full"));
    if (variant != "full" && variant != "strictly-positive")
      input_error("unknown variant '" + variant + "'");
    params["cap"] = cap;
    params["variant"] = variant;
    subj.semigroup =
        lsc_semigroup(*subj.space, cap,
                      variant == "full" ? LscVariant::full : LscVariant::strictly_positive)
            .presentation;
  } else if (doc.contains("chain")) {
    subj.kind = "chain";
    ChainSystem sys;
    try {
      for (const auto& st : doc["chain"].at("stages"))
        sys.stages.push_back(validate_presentation(raw_of(st), {64, true}));
      sys.maps = doc["chain"].at("maps").get<std::vector<std::vector<std::size_t>>>();
    } catch (const Json::exception& e) {
      throw InvalidInput("invalid-parameters", std::string("chain: ") + e.what());
    }
    subj.semigroup = chain_limit(sys, subj.name);
  } else if (doc.contains("retract")) {
    subj.kind = "retract";
    const auto& r = doc["retract"];
    if (!r.contains("s") || !r.contains("t") || !r.contains("iota") || !r.contains("sigma"))
      input_error("retract needs s, t, iota and sigma");
    subj.s = side_of(r["s"], "S");
    subj.t = side_of(r["t"], "T");
    subj.pair = RetractPair{map_of(r["iota"]), map_of(r["sigma"])};
  } else {
    input_error(*job.input + ": no presentation, space, chain or retract field");
  }
  return subj;
}

const AnySemigroup& need_semigroup(const Subject& subj, const std::string& task) {
  if (!subj.semigroup) input_error("task '" + task + "' needs a semigroup input");
  return *subj.semigroup;
}

const FinitePresentation& need_finite(const Subject& subj, const std::string& task) {
  const auto& s = need_semigroup(subj, task);
  if (auto* f = std::get_if<FinitePresentation>(&s)) return *f;
  input_error("task '" + task + "' needs a finite presentation");
}

Json run_dim(const AnySemigroup& any, std::size_t n, const JobSpec& job) {
  DimBoundedOptions opt;
  opt.n = n;
  opt.r_max = job.r_max;
  opt.depth = job.depth;
  opt.slack = job.slack;
  return std::visit(
      [&](const auto& s) {
        auto v = dim_bounded(s, opt);
        Json j{{"n", n},
               {"form", std::is_same_v<std::decay_t<decltype(s)>, FinitePresentation> ? "relaxed"
                                                                                       : "strict"}};
        j.update(verdict_json(s, v));
        if (v.status == VerdictStatus::refuted) j["counterexample"] = instance_json(s, instance_of(v));
        return j;
      },
      any);
}

template <class S>
Json run_witness(const S& s, std::size_t n, const std::vector<std::string>& elems,
                 const JobSpec& job) {
  using E = typename S::element_type;
  std::vector<E> xs;
  for (const auto& t : elems) {
    if constexpr (std::is_same_v<S, FinitePresentation>) {
      auto e = s.find(t);
      if (!e) throw InvalidInput("invalid-element", "'" + t + "' is not an element");
      xs.push_back(*e);
    } else {
      xs.push_back(s.parse(t));
    }
  }
  Instance<E> inst{xs[0], xs[1], std::vector<E>(xs.begin() + 2, xs.end())};
  Json j{{"n", n}};
  std::optional<Witness<E>> w;
  if constexpr (std::is_same_v<S, FinitePresentation>) {
    auto all = s.elements();
    if (!is_instance(s, inst, Form::relaxed))
      throw InvalidInput("invalid-instance", "not an instance x' <= x <= sum ys");
    j["form"] = "relaxed";
    j["space_size"] = all.size();
    w = find_witness(s, inst, n, std::span<const E>(all), Form::relaxed);
  } else {
    auto space = s.basis(job.depth + job.slack);
    j["form"] = "strict";
    j["space_size"] = space.size();
    j["depth"] = job.depth + job.slack;
    w = find_witness(s, inst, n, std::span<const E>(space), Form::strict);
  }
  j["instance"] = instance_json(s, inst);
  j["found"] = w.has_value();
  if (w) j["witness"] = witness_json(s, *w);
  return j;
}

Json run_classify(const AnySemigroup& any, const JobSpec& job) {
  Json rows = Json::array();
  std::visit(overloaded{
                 [&](const FinitePresentation& s) {
                   for (auto x : s.elements()) {
                     auto c = classify_element(s, x);
                     rows.push_back(Json{{"element", s.name(x)},
                                         {"compact", flag_json(c.compact)},
                                         {"soft", flag_json(c.soft)},
                                         {"thin_boundary", flag_json(c.thin_boundary)},
                                         {"complementable", flag_json(c.complementable)}});
                   }
                 },
                 [&](const SymbolicSemigroup& s) {
                   ClassifyOptions opt;
                   opt.depth = job.depth;
                   opt.slack = job.slack;
                   for (const auto& x : s.basis(job.depth)) {
                     auto c = classify_element(s, x, opt);
                     rows.push_back(Json{{"element", s.format(x)},
                                         {"compact", flag_json(c.compact)},
                                         {"soft", flag_json(c.soft)},
                                         {"thin_boundary", flag_json(c.thin_boundary)},
                                         {"complementable", flag_json(c.complementable)}});
                   }
                 }},
             any);
  return Json{{"elements", rows}};
}

Json run_profile(const AnySemigroup& any, const JobSpec& job) {
  SemigroupProfile p = std::visit(overloaded{[](const FinitePresentation& s) { return profile(s); },
                                             [&](const SymbolicSemigroup& s) {
                                               ClassifyOptions opt;
                                               opt.depth = job.depth;
                                               opt.slack = job.slack;
                                               return profile(s, opt);
                                             }},
                                  any);
  return Json{{"simple", flag_json(p.simple)},       {"elementary", flag_json(p.elementary)},
              {"algebraic", flag_json(p.algebraic)}, {"soft", flag_json(p.soft)},
              {"idempotent", flag_json(p.idempotent)}, {"dichotomy", to_string(p.dichotomy)}};
}

Json run_permanence(const JobSpec& job) {
  auto corpus = random_corpus(120, job.seed);
  std::vector<bool> d0;
  for (const auto& e : corpus) d0.push_back(dim_zero_exact(e.presentation).holds);
  Json sums = Json::array(), ideals = Json::array(), cross = Json::array();
  std::size_t pairs = 0, ideal_count = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    std::size_t j = (i * 37 + 11) % corpus.size();
    ++pairs;
    bool got = dim_zero_exact(direct_sum(corpus[i].presentation, corpus[j].presentation)).holds;
    if (got != (d0[i] && d0[j])) sums.push_back(corpus[i].origin + " + " + corpus[j].origin);
    DimBoundedOptions opt;
    opt.n = 0;
    opt.r_max = 2;
    bool bounded = dim_bounded(corpus[i].presentation, opt).status == VerdictStatus::verified_up_to;
    if (bounded != d0[i]) cross.push_back(corpus[i].origin);
    if (!d0[i]) continue;
    for (const auto& ideal : all_ideals(corpus[i].presentation)) {
      ++ideal_count;
      if (!dim_zero_exact(quotient(corpus[i].presentation, ideal).quotient).holds ||
          !dim_zero_exact(restrict_to_ideal(corpus[i].presentation, ideal)).holds)
        ideals.push_back(corpus[i].origin + " / ideal of size " + std::to_string(ideal.size()));
    }
  }
  std::size_t zero_dim = static_cast<std::size_t>(std::count(d0.begin(), d0.end(), true));
  return Json{{"seed", job.seed},
              {"presentations", corpus.size()},
              {"zero_dimensional", zero_dim},
              {"sum_pairs", pairs},
              {"sum_violations", sums},
              {"ideals_checked", ideal_count},
              {"ideal_violations", ideals},
              {"cross_path_violations", cross},
              {"holds", sums.empty() && ideals.empty() && cross.empty()}};
}

Json run_task(const std::string& task, const Subject& subj, const JobSpec& job) {
  auto parts = split(task, ':');
  const auto& head = parts[0];
  Json rec{{"task", task}};
  auto body = [&]() -> Json {
    if (head == "validate") {
      return std::visit(
          overloaded{[](const FinitePresentation& s) {
                       return Json{{"valid", true}, {"size", s.size()}, {"exact", true}};
                     },
                     [&](const SymbolicSemigroup& s) {
                       auto b = s.basis(job.depth);
                       auto bad = sample_check_structure(s, b);
                       Json j{{"valid", !bad}, {"exact", bad.has_value()}, {"depth", job.depth},
                              {"sample_size", b.size()}};
                       if (bad) j["violation"] = *bad;
                       return j;
                     }},
          need_semigroup(subj, task));
    }
    if (head == "axioms") {
      return std::visit(overloaded{[](const FinitePresentation& s) {
                                     auto r = check_axioms(s);
                                     return Json{{"O5", axiom_json(s, r.o5)},
                                                 {"O6", axiom_json(s, r.o6)},
                                                 {"weak_cancellation",
                                                  axiom_json(s, r.weak_cancellation)}};
                                   },
                                   [&](const SymbolicSemigroup& s) {
                                     auto r = sample_check_axioms(s, job.depth, job.slack);
                                     return Json{{"O5", axiom_json(s, r.o5)},
                                                 {"O6", axiom_json(s, r.o6)},
                                                 {"weak_cancellation",
                                                  axiom_json(s, r.weak_cancellation)},
                                                 {"depth", r.depth},
                                                 {"slack", r.slack}};
                                   }},
                        need_semigroup(subj, task));
    }
    if (head == "dim0") {
      const auto& any = need_semigroup(subj, task);
      if (auto* f = std::get_if<FinitePresentation>(&any)) {
        auto r = dim_zero_exact(*f);
        Json j{{"holds", r.holds}, {"exact", true}};
        if (r.counterexample) j["counterexample"] = instance_json(*f, *r.counterexample);
        return j;
      }
      auto j = run_dim(any, 0, job);
      j["holds"] = j["status"] != "refuted";
      return j;
    }
    if (head == "dim") {
      if (parts.size() != 2) input_error("expected dim:N");
      return run_dim(need_semigroup(subj, task), parse_count(parts[1], task), job);
    }
    if (head == "witness") {
      if (parts.size() != 3) input_error("expected witness:N:x';x;y1;...");
      auto elems = split(parts[2], ';');
      if (elems.size() < 3) input_error("witness needs x', x and at least one y");
      std::size_t n = parse_count(parts[1], task);
      return std::visit([&](const auto& s) { return run_witness(s, n, elems, job); },
                        need_semigroup(subj, task));
    }
    if (head == "certify") {
      if (parts.size() != 2 || (parts[1] != "riesz" && parts[1] != "idempotent"))
        input_error("expected certify:riesz or certify:idempotent");
      auto method = parts[1] == "riesz" ? Certificate::riesz : Certificate::idempotent;
      return std::visit(overloaded{[&](const FinitePresentation& s) {
                                     return verdict_json(s, certify_dim0(s, method));
                                   },
                                   [&](const SymbolicSemigroup& s) {
                                     return verdict_json(
                                         s, certify_dim0(s, method, job.depth, job.slack));
                                   }},
                        need_semigroup(subj, task));
    }
    if (head == "classify") return run_classify(need_semigroup(subj, task), job);
    if (head == "profile") return run_profile(need_semigroup(subj, task), job);
    if (head == "riesz-interpolation") {
      const auto& s = need_finite(subj, task);
      return verdict_json(s, riesz_interpolation_check(s));
    }
    if (head == "almost-divisible") {
      return std::visit(overloaded{[&](const FinitePresentation& s) {
                                     auto v = almost_divisible_check(s, job.n_max);
                                     Json j = verdict_json(s, v);
                                     j["n_max"] = job.n_max;
                                     return j;
                                   },
                                   [&](const SymbolicSemigroup& s) {
                                     auto v = almost_divisible_check(s, job.n_max, job.depth,
                                                                     job.slack);
                                     Json j = verdict_json(s, v);
                                     j["n_max"] = job.n_max;
                                     return j;
                                   }},
                        need_semigroup(subj, task));
    }
    if (head == "covering-dim") {
      if (!subj.space) input_error("task 'covering-dim' needs a space input");
      return Json{{"points", subj.space->size()},
                  {"opens", subj.space->opens().size()},
                  {"covering_dim", covering_dim(*subj.space)}};
    }
    if (head == "permanence-suite") return run_permanence(job);
    if (head == "retract") {
      if (!subj.pair) input_error("task 'retract' needs a retract input");
      auto r = retract_check(*subj.s, *subj.t, *subj.pair, job.depth);
      Json j{{"holds", r.holds}, {"depth", r.depth}};
      if (!r.holds) {
        j["violation"] = r.violation;
        Json t = Json::array();
        for (const auto& e : r.tuple) t.push_back(subj.s->contains(e) ? subj.s->format(e)
                                                                      : subj.t->format(e));
        j["tuple"] = t;
      }
      return j;
    }
    input_error("unknown task '" + task + "'");
  };
  rec.update(body());
  return rec;
}

// Every key of `want` must equal the same key of `got`, recursively for
// objects.
bool matches(const Json& got, const Json& want, const std::string& path, std::ostream& diag) {
  if (want.is_object() && got.is_object()) {
    bool ok = true;
    for (auto it = want.begin(); it != want.end(); ++it) {
      if (!got.contains(it.key())) {
        diag << "expectation " << path << "." << it.key() << ": missing in report\n";
        ok = false;
      } else if (!matches(got[it.key()], it.value(), path + "." + it.key(), diag)) {
        ok = false;
      }
    }
    return ok;
  }
  if (got != want) {
    diag << "expectation " << path << ": expected " << want.dump() << ", got " << got.dump()
         << "\n";
    return false;
  }
  return true;
}

}  // namespace

int run(const JobSpec& job, std::ostream& report, std::ostream& diag) {
  Json doc{{"schema_version", schema_version}};
  auto emit = [&] { report << doc.dump(2) << "\n"; };
  Json params{{"depth", job.depth}, {"slack", job.slack}, {"r_max", job.r_max},
              {"n_max", job.n_max}, {"seed", job.seed}};
  Subject subj;
  Json expect;
  try {
    if (job.tasks.empty()) input_error("no tasks given");
    subj = load(job, params);
    if (job.expect) expect = read_json(*job.expect);
    if (!expect.is_null() && !expect.is_object())
      input_error("expectation document must be an object");
  } catch (const CapExceeded& e) {
    diag << "error: " << e.what() << "\n";
    doc["error"] = Json{{"kind", "cap-exceeded"}, {"message", e.what()}};
    emit();
    return exit_cap_exceeded;
  } catch (const ValidationError& e) {
    diag << "error: " << e.what() << "\n";
    doc["error"] = Json{{"kind", to_string(e.kind())}, {"message", e.what()}, {"witness", e.witness()}};
    emit();
    return exit_input_error;
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << "\n";
    std::string kind = "invalid-input";
    if (auto* ii = dynamic_cast<const InvalidInput*>(&e)) kind = ii->kind();
    doc["error"] = Json{{"kind", kind}, {"message", e.what()}};
    emit();
    return exit_input_error;
  }

  doc["input"] = Json{{"kind", subj.kind}, {"name", subj.name}};
  if (subj.semigroup)
    std::visit(overloaded{[&](const FinitePresentation& s) {
                            doc["input"]["carrier_size"] = s.size();
                          },
                          [&](const SymbolicSemigroup& s) { doc["input"]["model"] = s.name(); }},
               *subj.semigroup);
  doc["parameters"] = params;
  doc["tasks"] = Json::array();

  int code = exit_ok;
  for (const auto& task : job.tasks) {
    try {
      doc["tasks"].push_back(run_task(task, subj, job));
    } catch (const CapExceeded& e) {
      diag << "task " << task << ": " << e.what() << "\n";
      doc["tasks"].push_back(Json{{"task", task}, {"error", "cap-exceeded"}, {"message", e.what()}});
      code = std::max(code, int{exit_cap_exceeded});
      continue;
    } catch (const std::exception& e) {
      diag << "task " << task << ": " << e.what() << "\n";
      std::string kind = "invalid-input";
      if (auto* ii = dynamic_cast<const InvalidInput*>(&e)) kind = ii->kind();
      doc["tasks"].push_back(Json{{"task", task}, {"error", kind}, {"message", e.what()}});
      code = code == exit_cap_exceeded ? code : int{exit_input_error};
      continue;
    }
    if (expect.contains(task) && !matches(doc["tasks"].back(), expect[task], task, diag) &&
        code == exit_ok)
      code = exit_mismatch;
  }
  for (auto it = expect.begin(); it != expect.end(); ++it)
    if (std::find(job.tasks.begin(), job.tasks.end(), it.key()) == job.tasks.end()) {
      diag << "expectation for task '" << it.key() << "' which was not run\n";
      if (code == exit_ok) code = exit_mismatch;
    }
  emit();
  return code;
}

}  // namespace cudim
