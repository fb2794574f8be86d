// Copyright 2026 The Authors.
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

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>

#include "spikelab/characteristic.hpp"
#include "spikelab/equivalence.hpp"
#include "spikelab/error.hpp"
#include "spikelab/exact_matrix.hpp"
#include "spikelab/facts.hpp"
#include "spikelab/search.hpp"
#include "spikelab/signature.hpp"
#include "spikelab/spike_rep.hpp"
#include "spikelab/zero_sum.hpp"

namespace spikelab::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string diag;
  std::uint32_t p = 0;
  std::size_t n = 0;
  std::vector<std::uint32_t> primes;
  std::size_t n_max = 5;
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::string output;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::string construction;
};

struct Report {
  json params = json::object();
  json payload = json::object();
  int exit = kSuccess;
};

using Handler = std::function<Report(const Options&)>;

const std::vector<std::uint32_t> kDefaultPrimes{2, 3, 5, 7, 11, 13};

json diagonal_json(const Diagonal& x) {
  return json{{"text", x.to_text()},
              {"p", x.p()},
              {"residues", std::vector<std::uint32_t>(x.residues().begin(), x.residues().end())},
              {"balanced", x.balanced()}};
}

json signature_json(const Signature& sig) {
  json members = json::array();
  for (auto m : sig.members()) members.push_back(m.elements());
  return json{{"hex", sig.to_hex()}, {"size", sig.size()}, {"members", members}};
}

json certificate_json(const std::optional<Certificate>& cert) {
  if (!cert) return nullptr;
  return json{{"singleton_values", cert->singleton_values},
              {"characteristic_zero", cert->characteristic_zero},
              {"cofinite", cert->cofinite},
              {"primes", cert->primes},
              {"applies_to", "fields of every characteristic"}};
}

json verdicts_json(const std::vector<CharVerdict>& verdicts) {
  json out = json::array();
  for (const auto& v : verdicts) {
    out.push_back(json{{"q", v.q},
                       {"representable", to_string(v.representable)},
                       {"witness", v.witness ? diagonal_json(*v.witness) : json(nullptr)},
                       {"method", to_string(v.method)}});
  }
  return out;
}

std::vector<std::uint32_t> primes_or_default(const Options& o) {
  return o.primes.empty() ? kDefaultPrimes : o.primes;
}

Report cmd_axioms(const Options& o) {
  const auto x = Diagonal::parse(o.diag);
  Report r;
  r.params = {{"diag", o.diag}};
  const bool ok = check_axioms(build_rep(x));
  r.payload = {{"diagonal", diagonal_json(x)}, {"n", x.size()}, {"axioms_hold", ok}};
  r.exit = ok ? kSuccess : kPropertyFailure;
  return r;
}

Report cmd_signature(const Options& o) {
  const auto x = Diagonal::parse(o.diag);
  Report r;
  r.params = {{"diag", o.diag}};
  r.payload = {{"diagonal", diagonal_json(x)}, {"n", x.size()}, {"signature", signature_json(signature(x))}};
  return r;
}

Report cmd_normalize(const Options& o) {
  const auto x = Diagonal::parse(o.diag);
  const auto y = normalize(x);
  const auto first = balanced_lift(inv(y[0]));
  Report r;
  r.params = {{"diag", o.diag}};
  r.payload = {{"input", diagonal_json(x)},
               {"normalized", diagonal_json(y)},
               {"first_inverse", first}};
  r.exit = first == -1 || (x.p() == 2 && first == 1) ? kSuccess : kPropertyFailure;
  return r;
}

Report cmd_canonical(const Options& o) {
  const auto x = Diagonal::parse(o.diag);
  Report r;
  r.params = {{"diag", o.diag}};
  r.payload = {{"input", diagonal_json(x)}, {"canonical", diagonal_json(canonical_form(x))}};
  return r;
}

Report cmd_enumerate(const Options& o) {
  const auto classes = enumerate_spikes(o.p, o.n);
  Report r;
  r.params = {{"p", o.p}, {"n", o.n}};
  json reps = json::array();
  std::uint64_t total = 0;
  for (const auto& c : classes) {
    total += c.orbit_size;
    reps.push_back({{"diagonal", diagonal_json(c.representative)},
                    {"orbit_size", c.orbit_size},
                    {"signature_size", signature(c.representative).size()}});
  }
  std::uint64_t expected = 1;
  for (std::size_t i = 0; i < o.n; ++i) expected *= o.p - 1;
  r.payload = {{"p", o.p},
               {"n", o.n},
               {"classes", classes.size()},
               {"diagonals", total},
               {"representatives", reps}};
  r.exit = total == expected ? kSuccess : kPropertyFailure;
  return r;
}

Report lemma_report(const Options& o, const char* name, const LemmaReport& lemma) {
  Report r;
  r.params = {{"p", o.p}, {"n", o.n}};
  json failures = json::array();
  for (const auto& f : lemma.failures) failures.push_back({{"a", f.a}, {"target", f.target}});
  r.payload = {{"lemma", name},
               {"p", lemma.p},
               {"n", lemma.n},
               {"checked", lemma.checked},
               {"failures", failures}};
  r.exit = lemma.failures.empty() ? kSuccess : kPropertyFailure;
  return r;
}

Report cmd_lemma21(const Options& o) {
  return lemma_report(o, "lemma21", verify_subset_sum_bound(o.p, static_cast<std::uint32_t>(o.n)));
}

Report cmd_lemma22(const Options& o) {
  return lemma_report(o, "lemma22", verify_zero_sum_bound(o.p, static_cast<std::uint32_t>(o.n)));
}

Report cmd_detcheck(const Options& o) {
  const auto modulus = make_field(o.p);
  if (o.n == 0) throw Error(ErrorCode::kTooSmall, "n must be positive");
  const std::uint64_t samples = o.samples ? o.samples : 500;
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::uint32_t> pick(1, o.p - 1);
  std::uint64_t mismatches = 0;
  json first = json::array();
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::vector<FieldElem> x;
    for (std::size_t i = 0; i < o.n; ++i) x.emplace_back(modulus, pick(rng));
    const auto closed = spike_det(x);
    const auto gauss = det(ones_plus_diagonal(x));
    if (closed == gauss) continue;
    ++mismatches;
    if (first.size() < 5) {
      std::vector<std::uint32_t> v;
      for (const auto& e : x) v.push_back(e.value());
      first.push_back({{"x", v}, {"closed_form", closed.value()}, {"elimination", gauss.value()}});
    }
  }
  Report r;
  r.params = {{"p", o.p}, {"n", o.n}, {"samples", samples}, {"seed", o.seed}};
  r.payload = {{"p", o.p}, {"n", o.n}, {"samples", samples}, {"mismatches", mismatches},
               {"examples", first}};
  r.exit = mismatches == 0 ? kSuccess : kPropertyFailure;
  return r;
}

Report cmd_unique(const Options& o) {
  const auto audit = uniqueness_audit(o.p, static_cast<std::uint32_t>(o.n));
  const bool expected_injective = o.n + 1 >= 2 * std::size_t{o.p};
  Report r;
  r.params = {{"p", o.p}, {"n", o.n}};
  json groups = json::array();
  for (const auto& g : audit.groups) {
    json ds = json::array();
    for (const auto& d : g.diagonals) ds.push_back(d.to_text());
    groups.push_back({{"signature", g.signature_hex}, {"diagonals", ds}});
  }
  r.payload = {{"p", audit.p},
               {"n", audit.n},
               {"diagonals", audit.diagonals},
               {"distinct", audit.distinct},
               {"collisions", audit.collisions},
               {"expected_injective", expected_injective},
               {"collision_groups", groups}};
  r.exit = expected_injective && audit.collisions > 0 ? kPropertyFailure : kSuccess;
  return r;
}

Report cmd_transfer(const Options& o) {
  const auto x = Diagonal::parse(o.diag);
  const std::size_t n = x.size();
  const std::uint64_t samples = o.samples ? o.samples : 200;
  const auto sig = signature(x);
  std::mt19937_64 rng(o.seed);
  std::uint64_t failures = 0;
  json first = json::array();
  for (std::uint64_t s = 0; s < samples; ++s) {
    IndexSet set;
    do {
      set = IndexSet(static_cast<std::uint32_t>(rng() & IndexSet::full(static_cast<unsigned>(n)).bits()));
    } while (!set.empty() && sig.contains(set));
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);

    const auto y = swap(x, set);
    std::vector<unsigned> moved;
    for (unsigned e : set.elements()) moved.push_back(static_cast<unsigned>(perm[e - 1] + 1));
    const auto moved_set = IndexSet::from_elements(moved);

    std::vector<std::string> broken;
    if (swap(x, set, SwapPath::kMatrix) != y) broken.push_back("matrix_path");
    if (swap(y, set) != x) broken.push_back("involution");
    if (signature(y) != sig.transformed(set)) broken.push_back("transform_law");
    if (signature(x.permuted(perm)) != sig.permuted(perm)) broken.push_back("permutation");
    if (swap(x.permuted(perm), moved_set) != y.permuted(perm)) broken.push_back("pull_back");
    if (broken.empty()) continue;
    ++failures;
    if (first.size() < 5) {
      first.push_back({{"swap_set", set.elements()}, {"permutation", perm}, {"broken", broken}});
    }
  }
  Report r;
  r.params = {{"diag", o.diag}, {"samples", samples}, {"seed", o.seed}};
  r.payload = {{"diagonal", diagonal_json(x)},
               {"samples", samples},
               {"failures", failures},
               {"examples", first}};
  r.exit = failures == 0 ? kSuccess : kPropertyFailure;
  return r;
}

Report cmd_charset(const Options& o) {
  const auto x = Diagonal::parse(o.diag);
  const auto primes = primes_or_default(o);
  const auto cs = characteristic_set(x, primes, o.node_budget);
  Report r;
  r.params = {{"diag", o.diag}, {"primes", primes}, {"node_budget", o.node_budget}};
  r.payload = {{"p", x.p()},
               {"n", x.size()},
               {"primes", primes},
               {"verdicts", verdicts_json(cs.verdicts)},
               {"certificate", certificate_json(cs.certificate)},
               {"agreement", cs.agreement},
               {"nodes_visited", cs.nodes_visited},
               {"budget_exhausted", cs.budget_exhausted}};
  const bool unknown = std::any_of(cs.verdicts.begin(), cs.verdicts.end(), [](const auto& v) {
    return v.representable == Verdict::kUnknown;
  });
  r.exit = !cs.agreement ? kPropertyFailure : unknown ? kBudget : kSuccess;
  return r;
}

std::vector<std::uint32_t> primes_from(std::uint32_t p, std::size_t count) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = p; out.size() < count; ++q) {
    if (is_prime(q)) out.push_back(q);
  }
  return out;
}

Report cmd_construct(const Options& o) {
  Report r;
  if (o.construction == "prop41") {
    const auto integers = multi_characteristic_integers(o.p);
    const auto base = multi_characteristic_spike(o.p);
    const auto primes = o.primes.empty() ? primes_from(o.p, 3) : o.primes;
    r.params = {{"construction", o.construction}, {"p", o.p}, {"primes", primes}};
    const auto base_sig = signature(base);
    const auto base_rep = build_rep(base);
    const auto base_bases = basis_family(base_rep.matrix());
    json reductions = json::array();
    bool ok = true;
    for (auto q : primes) {
      const auto reduced = Diagonal::from_integers(make_field(q), integers);
      const auto rep = build_rep(reduced);
      const bool same_sig = signature(reduced) == base_sig;
      const bool same_bases = basis_family(rep.matrix()) == base_bases;
      const bool axioms = check_axioms(rep);
      if (q >= o.p) ok = ok && same_sig && same_bases && axioms;
      reductions.push_back({{"q", q},
                            {"diagonal", diagonal_json(reduced)},
                            {"same_signature", same_sig},
                            {"same_bases", same_bases},
                            {"axioms_hold", axioms}});
    }
    r.payload = {{"construction", "prop41"},
                 {"p", o.p},
                 {"n", base.size()},
                 {"integer_entries", integers},
                 {"diagonal", diagonal_json(base)},
                 {"basis_count", base_bases.members.size()},
                 {"reductions", reductions}};
    r.exit = ok ? kSuccess : kPropertyFailure;
    return r;
  }
  const auto inverses = single_characteristic_inverses(o.p);
  const auto x = single_characteristic_spike(o.p);
  const auto cert = certificate_for(signature(x), o.p);
  r.params = {{"construction", o.construction}, {"p", o.p}};
  const bool exact = cert && !cert->cofinite &&
                     cert->primes == std::vector<std::uint64_t>{o.p};
  r.payload = {{"construction", "prop43"},
               {"p", o.p},
               {"n", x.size()},
               {"inverse_integers", inverses},
               {"diagonal", diagonal_json(x)},
               {"certificate", certificate_json(cert)},
               {"only_characteristic_p", exact}};
  r.exit = exact ? kSuccess : kPropertyFailure;
  return r;
}

Report cmd_lbound(const Options& o) {
  const auto t = estimate_threshold(o.p, o.primes, o.n_max, o.node_budget);
  Report r;
  r.params = {{"p", o.p}, {"primes", o.primes}, {"n_max", o.n_max}, {"node_budget", o.node_budget}};
  r.payload = {{"p", t.p},
               {"primes", t.primes},
               {"n_max", t.n_max},
               {"status", to_string(t.status)},
               {"least_n", t.least_n ? json(*t.least_n) : json(nullptr)},
               {"witness", t.witness ? diagonal_json(*t.witness) : json(nullptr)},
               {"certificate", certificate_json(t.certificate)},
               {"interval", {t.interval.lo, t.interval.hi}},
               {"in_interval", t.in_interval},
               {"classes_scanned", t.classes_scanned},
               {"nodes_visited", t.nodes_visited}};
  r.exit = t.status == ThresholdStatus::kInconclusive ? kPropertyFailure : kSuccess;
  return r;
}

void write_atomically(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string());
    f << text;
    if (!f.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact spike matroid experiments over prime fields", "spike-lab"};
  app.require_subcommand(1);
  Options o;
  std::map<CLI::App*, std::pair<std::string, Handler>> handlers;

  auto command = [&](const std::string& name, const std::string& help, Handler h) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--output", o.output, "Write the report to this file");
    handlers[sub] = {name, std::move(h)};
    return sub;
  };
  auto diag = [&](CLI::App* sub) {
    sub->add_option("--diag", o.diag, "Diagonal as p=<prime>;x=<v1>,...")->required();
  };
  auto p_n = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "Prime modulus")->required();
    sub->add_option("--n", o.n, "Number of lines")->required();
  };
  auto primes = [&](CLI::App* sub) {
    sub->add_option("--primes", o.primes, "Comma-separated primes")->delimiter(',');
  };
  auto budget = [&](CLI::App* sub) {
    sub->add_option("--node-budget", o.node_budget, "Search node budget")
        ->check(CLI::PositiveNumber);
  };
  auto sampling = [&](CLI::App* sub) {
    sub->add_option("--samples", o.samples, "Number of random cases");
    sub->add_option("--seed", o.seed, "Random seed");
  };

  diag(command("axioms", "Check the spike conditions with the rank oracle", cmd_axioms));
  diag(command("signature", "Circuit-hyperplane index sets of a diagonal", cmd_signature));
  diag(command("normalize", "Weakly equivalent diagonal with first entry -1", cmd_normalize));
  diag(command("canonical", "Canonical weak-equivalence representative", cmd_canonical));
  p_n(command("enumerate", "One representative per weak-equivalence class", cmd_enumerate));
  p_n(command("lemma21", "Exhaustive check that every nonzero target is a subset sum", cmd_lemma21));
  p_n(command("lemma22", "Exhaustive check that a nonempty zero-sum subset exists", cmd_lemma22));
  {
    auto* sub = command("detcheck", "Closed-form spike determinant against elimination", cmd_detcheck);
    p_n(sub);
    sampling(sub);
  }
  p_n(command("unique", "Signature collisions over all diagonals", cmd_unique));
  {
    auto* sub = command("transfer", "Swap and relabeling laws on random cases", cmd_transfer);
    diag(sub);
    sampling(sub);
  }
  {
    auto* sub = command("charset", "Representability over each given prime", cmd_charset);
    diag(sub);
    primes(sub);
    budget(sub);
  }
  {
    auto* sub = command("construct", "Build a multi- or single-characteristic spike", cmd_construct);
    sub->add_option("construction", o.construction, "prop41 or prop43")
        ->required()
        ->check(CLI::IsMember({"prop41", "prop43"}));
    sub->add_option("--p", o.p, "Prime modulus")->required();
    primes(sub);
  }
  {
    auto* sub = command("lbound", "Least n with a spike representable only in characteristic p",
                        cmd_lbound);
    sub->add_option("--p", o.p, "Prime modulus")->required();
    sub->add_option("--n-max", o.n_max, "Largest n to scan");
    primes(sub);
    budget(sub);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const auto& [name, handler] = handlers.at(chosen);
  try {
    const auto start = std::chrono::steady_clock::now();
    Report r = handler(o);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    json report = {{"schema", 1}, {"command", name}, {"params", r.params}};
    for (auto& [key, value] : r.payload.items()) report[key] = value;
    report["timing"] = {{"elapsed_ms", ms}};
    const std::string text = report.dump(2) + "\n";
    if (o.output.empty()) {
      out << text;
    } else {
      write_atomically(o.output, text);
    }
    return r.exit;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kBudgetExceeded ? kBudget : kUsage;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kPropertyFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace spikelab::cli
