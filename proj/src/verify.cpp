// Copyright 2026 The matchsym Authors.
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

#include "matchsym/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "matchsym/bessel.hpp"
#include "matchsym/bijection.hpp"
#include "matchsym/knuth.hpp"
#include "matchsym/patterns.hpp"
#include "matchsym/schreier.hpp"
#include "matchsym/symfunc.hpp"

namespace matchsym {
namespace {

// First failure wins; later ones only bump the count.
struct Tally {
  std::size_t failures = 0;
  std::string first;

  void fail(const std::string& what) {
    if (failures++ == 0) first = what;
  }
  void merge(Tally&& other) {
    if (failures == 0 && other.failures > 0) first = std::move(other.first);
    failures += other.failures;
  }
};

Tally parallel_tally(std::size_t count, const Workers& workers,
                     const std::function<void(Tally&, std::size_t)>& body) {
  return parallel_reduce<Tally>(
      count, workers, [] { return Tally{}; }, body,
      [](Tally& acc, Tally&& part) { acc.merge(std::move(part)); });
}

void finish(CheckResult& r, const Tally& t, const std::string& ok_detail) {
  r.passed = t.failures == 0;
  r.detail = r.passed ? ok_detail
                      : std::to_string(t.failures) + " failure(s); first: " +
                            t.first;
}

std::string nf(int n, int f) {
  return "(N=" + std::to_string(n) + ",f=" + std::to_string(f) + ")";
}

CheckResult begin(std::string id, std::string title) {
  CheckResult r;
  r.id = std::move(id);
  r.title = std::move(title);
  return r;
}

std::string bound(const char* name, int value) {
  return std::string(name) + "<=" + std::to_string(value);
}

}  // namespace

VerifyBounds VerifyBounds::capped(int max_n, int max_2n) const {
  VerifyBounds b = *this;
  for (int* v : {&b.schur_n, &b.criterion_n, &b.bijection_n,
                 &b.random_order_n, &b.classes_n, &b.bessel_coeff_n,
                 &b.pattern_n, &b.avoider_n, &b.refine_n, &b.hook_n}) {
    *v = std::min(*v, max_n);
  }
  b.bessel_n = std::min(b.bessel_n, max_n / 2);
  b.collapse_n = std::min(b.collapse_n, max_n / 2);
  b.schreier_2n = std::min(b.schreier_2n, max_2n);
  return b;
}

std::int64_t count_short_free(int n, int f) {
  std::int64_t count = 0;
  for_each_matching(n, f, [&](const Matching& m) {
    if (short_set(m).empty()) ++count;
  });
  return count;
}

// ---------------------------------------------------------------------------

CheckResult check_two_row_expansion(const VerifyOptions& opt) {
  const int top = opt.bounds.schur_n;
  CheckResult r = begin("two-row-expansion",
                "M_{N,f} under Short is Schur-positive with two-row shapes and "
                "c_k = |M_{N-2k,f}(Short=0)|");
  r.provenance = "symfunc.schur_expand(descent_vector(enumerate_matchings(N,f), "
                 "short_set)) vs count_short_free; " + bound("N", top);
  std::map<std::pair<int, int>, std::int64_t> free_counts;
  auto short_free = [&](int n, int f) {
    auto [it, inserted] = free_counts.try_emplace({n, f}, 0);
    if (inserted) it->second = count_short_free(n, f);
    return it->second;
  };
  Tally t;
  Json cases = Json::array();
  for (int n = 0; n <= top; ++n) {
    for (int f = n % 2; f <= n; f += 2) {
      const auto all = enumerate_matchings(n, f);
      const auto q = schur_expand(descent_vector(all, short_set, n, opt.workers));
      std::vector<std::int64_t> expected;
      for (int k = 0; 2 * k <= n - f; ++k) {
        expected.push_back(short_free(n - 2 * k, f));
      }
      Json row = {{"N", n}, {"f", f}, {"count", all.size()},
                  {"coefficients", expected}};
      if (!q) {
        t.fail(nf(n, f) + " is not symmetric");
        row["expansion"] = nullptr;
        cases.push_back(std::move(row));
        continue;
      }
      row["expansion"] = to_json(*q);
      cases.push_back(std::move(row));
      if (!q->is_schur_positive()) t.fail(nf(n, f) + " has a negative term");
      if (!q->only_two_row()) t.fail(nf(n, f) + " has a shape with 3+ rows");
      for (int k = 0; 2 * k <= n; ++k) {
        const std::int64_t want =
            k < static_cast<int>(expected.size()) ? expected[k] : 0;
        const std::int64_t got = q->coefficient(Partition::two_row(n, k));
        if (got != want) {
          t.fail(nf(n, f) + " coefficient k=" + std::to_string(k) + " is " +
                 std::to_string(got) + ", expected " + std::to_string(want));
        }
      }
    }
  }
  r.data["cases"] = std::move(cases);
  finish(r, t, std::to_string(r.data["cases"].size()) + " (N,f) pairs, " +
                   bound("N", top));
  return r;
}

// ---------------------------------------------------------------------------

CheckResult check_sparse_criterion(const VerifyOptions& opt) {
  const int top = opt.bounds.criterion_n;
  CheckResult r = begin("sparse-criterion",
                "Sparse constant-count criterion holds exactly for two-row "
                "expandable vectors");
  r.provenance = "symfunc.sparse_criterion on M_{N,f}/Short, on every shape "
                 "vector, and on perturbed vectors; " + bound("N", top);
  Tally t;
  std::size_t positives = 0, shapes = 0, negatives = 0;
  for (int n = 0; n <= top; ++n) {
    for (int f = n % 2; f <= n; f += 2) {
      const DescentVector v =
          descent_vector(enumerate_matchings(n, f), short_set, n, opt.workers);
      const CriterionResult c = sparse_criterion(v);
      const auto q = schur_expand(v);
      ++positives;
      if (!c.holds) t.fail(nf(n, f) + ": criterion rejected a matching set");
      if (!q || *q != two_row_expansion(n, c.coefficients)) {
        t.fail(nf(n, f) + ": criterion coefficients disagree with expansion");
      }
    }
    // Converse direction on a basis: a single Schur function passes the
    // criterion exactly when its shape has at most two rows.
    for (const Partition& shape : partitions_of(n)) {
      ++shapes;
      const CriterionResult c = sparse_criterion(descent_vector_of_shape(shape));
      if (c.holds != shape.is_two_row()) {
        t.fail("shape " + shape.to_string() + ": criterion says " +
               (c.holds ? "two-row" : "not two-row"));
      } else if (c.holds) {
        SchurExpansion single(n);
        single.add(shape, 1);
        if (two_row_expansion(n, c.coefficients) != single) {
          t.fail("shape " + shape.to_string() + ": wrong coefficients");
        }
      }
    }
    if (n < 3) continue;
    // Synthetic negatives: one extra count at {1} breaks the constant count
    // over sparse singletons; one at {1,2} breaks sparsity.
    const DescentVector base =
        descent_vector(enumerate_matchings(n, n % 2), short_set, n);
    for (const StatSet& extra : {StatSet(n, {1}), StatSet(n, {1, 2})}) {
      ++negatives;
      DescentVector bad = base;
      bad.add(extra);
      const CriterionResult c = sparse_criterion(bad);
      const auto q = schur_expand(bad);
      if (c.holds) {
        t.fail("N=" + std::to_string(n) + ": perturbation at " +
               extra.to_string() + " accepted");
      }
      if (q && q->only_two_row() && q->is_schur_positive()) {
        t.fail("N=" + std::to_string(n) + ": perturbation at " +
               extra.to_string() + " still two-row expandable");
      }
    }
  }
  r.data = {{"matching_sets", positives},
            {"shape_vectors", shapes},
            {"negative_instances", negatives}};
  finish(r, t,
         std::to_string(positives) + " matching sets, " +
             std::to_string(shapes) + " shapes, " + std::to_string(negatives) +
             " negatives rejected, " + bound("N", top));
  return r;
}

// ---------------------------------------------------------------------------

CheckResult check_bijection(const VerifyOptions& opt) {
  const int top = opt.bounds.bijection_n;
  const int rtop = opt.bounds.random_order_n;
  const int orders = opt.bounds.random_orders;
  CheckResult r = begin("bijection",
                "forward/inverse are mutually inverse, Des(T(m)) = Short(m), "
                "reduction is order independent");
  r.provenance = "bijection.forward/inverse/reduce_random; " + bound("N", top) +
                 ", random orders " + bound("N", rtop) + " x" +
                 std::to_string(orders) + " seed " + std::to_string(opt.seed);
  Tally t;
  std::size_t forward_checked = 0, inverse_checked = 0, random_checked = 0;
  for (int n = 0; n <= top; ++n) {
    for (int f = n % 2; f <= n; f += 2) {
      const auto all = enumerate_matchings(n, f);
      forward_checked += all.size();
      t.merge(parallel_tally(all.size(), opt.workers, [&](Tally& acc,
                                                          std::size_t i) {
        const Matching& m = all[i];
        const BijectionImage img = forward(m);
        const int k = img.tableau.k();
        if (!short_set(img.core).empty()) {
          acc.fail(m.to_string() + ": core has a short chord");
        } else if (img.core.n() != n - 2 * k) {
          acc.fail(m.to_string() + ": core size mismatch");
        } else if (img.tableau.descent_set() != short_set(m)) {
          acc.fail(m.to_string() + ": Des(T) != Short");
        } else if (inverse(img.core, img.tableau) != m) {
          acc.fail(m.to_string() + ": inverse(forward(m)) != m");
        }
      }));
      std::size_t pairs = 0;
      for (int k = 0; 2 * k <= n - f; ++k) {
        std::vector<Matching> cores;
        for_each_matching(n - 2 * k, f, [&](const Matching& c) {
          if (short_set(c).empty()) cores.push_back(c);
        });
        const auto tabs = enumerate_two_row_tableaux(n, k);
        pairs += cores.size() * tabs.size();
        t.merge(parallel_tally(cores.size(), opt.workers, [&](Tally& acc,
                                                              std::size_t i) {
          for (const TwoRowTableau& tab : tabs) {
            const BijectionImage back = forward(inverse(cores[i], tab));
            if (back.core != cores[i] || back.tableau != tab) {
              acc.fail(nf(n, f) + ": forward(inverse(" + cores[i].to_string() +
                       ", T)) differs");
            }
          }
        }));
      }
      inverse_checked += pairs;
      if (pairs != all.size()) {
        t.fail(nf(n, f) + ": " + std::to_string(pairs) +
               " (core, tableau) pairs for " + std::to_string(all.size()) +
               " matchings");
      }
      if (n > rtop) continue;
      random_checked += all.size() * orders;
      t.merge(parallel_tally(all.size(), opt.workers, [&](Tally& acc,
                                                          std::size_t i) {
        std::seed_seq seq{opt.seed, std::uint64_t(n), std::uint64_t(f),
                          std::uint64_t(i)};
        std::mt19937_64 rng(seq);
        const ReductionResult base = reduce(all[i]);
        for (int trial = 0; trial < orders; ++trial) {
          const ReductionResult other = reduce_random(all[i], rng);
          if (other.core != base.core || other.stable != base.stable) {
            acc.fail(all[i].to_string() + ": removal order changes the core");
            return;
          }
        }
      }));
    }
  }
  r.data = {{"forward_roundtrips", forward_checked},
            {"inverse_roundtrips", inverse_checked},
            {"random_orders", random_checked}};
  finish(r, t,
         std::to_string(forward_checked) + " matchings, " +
             std::to_string(inverse_checked) + " (core,T) pairs, " +
             std::to_string(random_checked) + " random reductions");
  return r;
}

// ---------------------------------------------------------------------------

CheckResult check_move_classes(const VerifyOptions& opt) {
  const int top = opt.bounds.classes_n;
  CheckResult r = begin("move-classes",
                "Move classes are core fibers, each with generating function "
                "s_{N-k,k}");
  r.provenance = "knuth.equivalence_classes, class_generating_function, "
                 "insertion_witness; " + bound("N", top);
  Tally t;
  std::size_t classes_seen = 0;
  Json counts = Json::array();
  for (int n = 0; n <= top; ++n) {
    for (int f = n % 2; f <= n; f += 2) {
      const auto classes = equivalence_classes(n, f);
      classes_seen += classes.size();
      counts.push_back({{"N", n}, {"f", f}, {"classes", classes.size()}});
      std::set<Matching> cores;
      std::size_t covered = 0;
      for (const auto& cls : classes) {
        covered += cls.size();
        const Matching c = core(cls.front());
        for (const Matching& m : cls) {
          if (core(m) != c) {
            t.fail(m.to_string() + " and " + cls.front().to_string() +
                   " share a class but not a core");
            break;
          }
        }
        if (!cores.insert(c).second) {
          t.fail("core " + c.to_string() + " is split over several classes");
        }
        const int k = (n - c.n()) / 2;
        const Partition shape = Partition::two_row(n, k);
        if (cls.size() != hook_length_count(shape)) {
          t.fail("class of " + cls.front().to_string() + " has size " +
                 std::to_string(cls.size()));
        }
        SchurExpansion single(n);
        single.add(shape, 1);
        if (class_generating_function(cls) != single) {
          t.fail("class of " + cls.front().to_string() +
                 " is not a single Schur function");
        }
      }
      if (covered != count_matchings(n, f)) {
        t.fail(nf(n, f) + ": classes do not cover M_{N,f}");
      }
      const auto all = enumerate_matchings(n, f);
      t.merge(parallel_tally(all.size(), opt.workers, [&](Tally& acc,
                                                          std::size_t i) {
        const Matching& m = all[i];
        Matching rebuilt = core(m);
        for (int pos : insertion_witness(m)) {
          rebuilt = insert_short_chord(rebuilt, pos);
        }
        if (rebuilt != m) acc.fail(m.to_string() + ": insertion witness fails");
        if (n + 2 > top) return;
        const Matching c = core(m);
        for (int pos = 1; pos <= n + 1; ++pos) {
          if (core(insert_short_chord(m, pos)) != c) {
            acc.fail(m.to_string() + ": insertion at " + std::to_string(pos) +
                     " changes the core");
          }
        }
      }));
    }
  }
  r.data["classes"] = std::move(counts);
  finish(r, t, std::to_string(classes_seen) + " classes, " + bound("N", top));
  return r;
}

// ---------------------------------------------------------------------------

CheckResult check_bessel(const VerifyOptions& opt) {
  const int top = opt.bounds.bessel_n;
  const int ctop = opt.bounds.bessel_coeff_n;
  const int ltop = opt.bounds.collapse_n;
  CheckResult r = begin("bessel",
                "theta_n(x-1) gives the short-chord distribution; Bessel "
                "coefficients match the enumeration");
  r.provenance = "bessel.shift_expand(bessel_theta(n),-1) vs "
                 "short_chord_distribution, " + bound("n", top) +
                 "; schur_coeffs_via_bessel vs count_short_free, " +
                 bound("N", ctop) + "; collapse_short_chords, " +
                 bound("n", ltop);
  Tally t;
  Json dist = Json::array();
  for (int n = 0; n <= top; ++n) {
    const auto brute = short_chord_distribution(n, opt.workers);
    const auto via = short_chord_distribution_via_bessel(n);
    dist.push_back({{"n", n},
                    {"theta", bessel_theta(n).to_string()},
                    {"h", brute}});
    if (brute != via) t.fail("h(P_" + std::to_string(2 * n) + ") mismatch");
    std::int64_t sum = 0;
    for (auto h : brute) sum += h;
    if (static_cast<std::uint64_t>(sum) != double_factorial_odd(2 * n)) {
      t.fail("sum of h(P_" + std::to_string(2 * n) + ") is " +
             std::to_string(sum));
    }
  }
  for (int n = 0; n <= ctop; ++n) {
    for (int f = n % 2; f <= n; f += 2) {
      const auto via = schur_coeffs_via_bessel(n, f);
      const auto q = schur_expand(
          descent_vector(enumerate_matchings(n, f), short_set, n, opt.workers));
      for (int k = 0; k < static_cast<int>(via.size()); ++k) {
        const std::int64_t brute = count_short_free(n - 2 * k, f);
        const std::int64_t from_q =
            q ? q->coefficient(Partition::two_row(n, k)) : -1;
        if (via[k] != brute || via[k] != from_q) {
          t.fail(nf(n, f) + " k=" + std::to_string(k) + ": Bessel " +
                 std::to_string(via[k]) + ", enumeration " +
                 std::to_string(brute) + ", expansion " +
                 std::to_string(from_q));
        }
      }
    }
  }
  for (int n = 0; n <= ltop; ++n) {
    for (const Matching& m : enumerate_matchings(2 * n, 0)) {
      const Matching c = collapse_short_chords(m);
      const int i = short_set(m).size();
      if (c.n() != 2 * n - i || c.num_singletons() != i ||
          !short_set(c).empty() || expand_singletons(c) != m) {
        t.fail(m.to_string() + ": collapse map fails");
      }
    }
    for (int i = 0; i <= n; ++i) {
      // The map is injective, so matching counts prove it is onto.
      const auto h = short_chord_distribution(n);
      if (h[i] != count_short_free(2 * n - i, i)) {
        t.fail("h(P_" + std::to_string(2 * n) + "," + std::to_string(i) +
               ") != |M_{2n-i,i}(Short=0)|");
      }
    }
  }
  r.data["distributions"] = std::move(dist);
  finish(r, t, "h(P_2n) for " + bound("n", top) + ", coefficients for " +
                   bound("N", ctop));
  return r;
}

// ---------------------------------------------------------------------------

CheckResult check_singleton_patterns(const VerifyOptions& opt) {
  const int ptop = opt.bounds.pattern_n;
  const int atop = opt.bounds.avoider_n;
  CheckResult r = begin("singleton-patterns",
                "Avoiders of m are Schur-positive for all sizes exactly when "
                "Short(m) is empty or m = {(1,2)}");
  r.provenance = "patterns.avoider sets over M_{N',f'}, " + bound("N'", atop) +
                 ", for every pattern in M_N, 1<=N<=" + std::to_string(ptop);
  struct Ambient {
    int n, f;
    std::vector<Matching> items;
    std::vector<std::uint64_t> masks;
  };
  std::vector<Ambient> ambient;
  for (int n = 0; n <= atop; ++n) {
    for (int f = n % 2; f <= n; f += 2) {
      Ambient a{n, f, enumerate_matchings(n, f), {}};
      for (const Matching& m : a.items) a.masks.push_back(short_set(m).mask());
      ambient.push_back(std::move(a));
    }
  }
  std::vector<Matching> patterns;
  for (int n = 1; n <= ptop; ++n) {
    for (Matching& m : enumerate_all_matchings(n)) patterns.push_back(std::move(m));
  }
  struct Outcome {
    bool positive = true;
    std::string witness;
  };
  std::vector<Outcome> outcomes(patterns.size());
  parallel_for(patterns.size(), opt.workers, [&](std::size_t p) {
    for (const Ambient& a : ambient) {
      DescentVector v(a.n);
      for (std::size_t i = 0; i < a.items.size(); ++i) {
        if (!contains_pattern(a.items[i], patterns[p])) v.add(a.masks[i]);
      }
      const auto q = schur_expand(v);
      if (!q || !q->is_schur_positive()) {
        outcomes[p] = {false, nf(a.n, a.f) +
                                  (q ? " has a negative term"
                                     : " is not symmetric")};
        return;
      }
    }
  });
  Tally t;
  Json rows = Json::array();
  std::size_t positive = 0;
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    const bool predicate = singleton_pattern_schur_positive(patterns[p]);
    positive += outcomes[p].positive ? 1 : 0;
    Json row = {{"pattern", patterns[p].to_string()},
                {"predicate", predicate},
                {"exhaustive", outcomes[p].positive}};
    if (!outcomes[p].positive) row["witness"] = outcomes[p].witness;
    rows.push_back(std::move(row));
    if (predicate != outcomes[p].positive) {
      t.fail(patterns[p].to_string() + ": predicate " +
             (predicate ? "true" : "false") + " but exhaustive " +
             (outcomes[p].positive ? "true" : "false"));
    }
  }
  r.data["patterns"] = std::move(rows);
  finish(r, t, std::to_string(patterns.size()) + " patterns (" +
                   std::to_string(positive) + " positive), " +
                   bound("N'", atop));
  return r;
}

// ---------------------------------------------------------------------------

CheckResult check_refinements(const VerifyOptions& opt) {
  const int top = opt.bounds.refine_n;
  CheckResult r = begin("refinements",
                "Every refinement cell is Schur-positive; moves preserve the "
                "intersection graph");
  r.provenance = "patterns.refine_by for all five keys, "
                 "IntersectionGraph::canonical_label under knuth.moves; " +
                 bound("N", top);
  Tally t;
  std::size_t cells = 0;
  Json per_key = Json::object();
  for (RefineKey key : all_refine_keys()) {
    std::size_t key_cells = 0;
    for (int n = 0; n <= top; ++n) {
      for (int f = n % 2; f <= n; f += 2) {
        for (const RefineCell& cell : refine_by(n, f, key, opt.workers)) {
          ++key_cells;
          if (!cell.schur_positive()) {
            t.fail(std::string(to_string(key)) + "=" + cell.key + " in " +
                   nf(n, f) + " is not Schur-positive");
          }
        }
      }
    }
    per_key[std::string(to_string(key))] = key_cells;
    cells += key_cells;
  }
  std::size_t moves_checked = 0;
  for (int n = 0; n <= top; ++n) {
    const auto all = enumerate_all_matchings(n);
    t.merge(parallel_tally(all.size(), opt.workers, [&](Tally& acc,
                                                        std::size_t i) {
      const IntersectionGraph g(all[i]);
      const auto label = g.canonical_label();
      for (const Matching& next : elementary_moves(all[i])) {
        const IntersectionGraph h(next);
        if (h.vertices() != g.vertices() || h.canonical_label() != label) {
          acc.fail(all[i].to_string() + " -> " + next.to_string() +
                   " changes the intersection graph");
        }
      }
    }));
    moves_checked += all.size();
  }
  r.data = {{"cells", per_key}, {"matchings_with_moves_checked", moves_checked}};
  finish(r, t, std::to_string(cells) + " cells over 5 keys, " +
                   bound("N", top));
  return r;
}

// ---------------------------------------------------------------------------

CheckResult check_schreier(const VerifyOptions& opt) {
  const int top = opt.bounds.schreier_2n;
  CheckResult r = begin("schreier",
                "Schreier graph is bipartite and graded, Loop = Short, Asc = "
                "involution ascents, Asc and Des equidistributed and "
                "Schur-positive");
  r.provenance = "schreier.build/asc_des_loop/check_conjecture; " +
                 bound("2n", top);
  Tally t;
  Json graphs = Json::array();
  for (int two_n = 2; two_n <= top; two_n += 2) {
    const SchreierGraph g = SchreierGraph::build(two_n, top);
    const std::string tag = "2n=" + std::to_string(two_n);
    if (!g.edges_are_involutions()) t.fail(tag + ": a generator is not an involution");
    if (!g.is_bipartite_ignoring_loops()) t.fail(tag + ": not bipartite/graded");
    std::size_t total = 0;
    for (auto s : g.layer_sizes()) total += s;
    if (total != double_factorial_odd(two_n)) {
      t.fail(tag + ": BFS does not reach every matching");
    }
    t.merge(parallel_tally(g.size(), opt.workers, [&](Tally& acc,
                                                      std::size_t v) {
      const Matching& m = g.vertex(v);
      const AscDesLoop s = asc_des_loop(g, v);
      if (s.loop != short_set(m)) acc.fail(m.to_string() + ": Loop != Short");
      if (s.asc != involution_ascents(m)) {
        acc.fail(m.to_string() + ": Asc differs from involution ascents");
      }
    }));
    const ConjectureReport c = check_conjecture(g, opt.workers);
    if (!c.equidistributed) t.fail(tag + ": Asc and Des not equidistributed");
    if (!c.asc_expansion || !c.asc_expansion->is_schur_positive()) {
      t.fail(tag + ": Asc is not Schur-positive");
    }
    if (!c.des_expansion || !c.des_expansion->is_schur_positive()) {
      t.fail(tag + ": Des is not Schur-positive");
    }
    Json row = {{"2n", two_n},
                {"vertices", g.size()},
                {"layer_sizes", g.layer_sizes()},
                {"equidistributed", c.equidistributed}};
    row["asc_expansion"] = c.asc_expansion ? to_json(*c.asc_expansion) : Json();
    row["des_expansion"] = c.des_expansion ? to_json(*c.des_expansion) : Json();
    graphs.push_back(std::move(row));
  }
  r.data["graphs"] = std::move(graphs);
  finish(r, t, "2n = 2.." + std::to_string(top));
  return r;
}

// ---------------------------------------------------------------------------

CheckResult check_hook_criterion(const VerifyOptions& opt) {
  const int top = opt.bounds.hook_n;
  constexpr int kTrials = 5;
  CheckResult r = begin("hook-criterion",
                "Statistics uniform by descent-set size expand in hooks with "
                "c_k = count at [k]");
  r.provenance = "symfunc.hook_criterion/schur_expand on synthetic families, " +
                 std::to_string(kTrials) + " per N, seed " +
                 std::to_string(opt.seed) + "; " + bound("N", top);
  Tally t;
  std::size_t families = 0, negatives = 0;
  for (int n = 1; n <= top; ++n) {
    for (int trial = 0; trial < kTrials; ++trial) {
      std::seed_seq seq{opt.seed, std::uint64_t(n), std::uint64_t(trial)};
      std::mt19937_64 rng(seq);
      std::uniform_int_distribution<int> pick(0, 4);
      std::vector<std::int64_t> c(n);
      for (auto& x : c) x = trial == 0 ? 1 : pick(rng);
      // A family of objects carrying a subset of [N-1]: c_{|J|} copies of J.
      std::vector<std::uint64_t> family;
      for (std::uint64_t s = 0; s < subset_count(n); ++s) {
        for (int copy = 0; copy < c[std::popcount(s)]; ++copy) family.push_back(s);
      }
      const DescentVector v = descent_vector(
          family, [n](std::uint64_t s) { return StatSet(n, s); }, n);
      const CriterionResult res = hook_criterion(v);
      const auto q = schur_expand(v);
      ++families;
      const std::string tag = "N=" + std::to_string(n) + " trial " +
                              std::to_string(trial);
      if (!res.holds) t.fail(tag + ": criterion rejected");
      if (res.coefficients != c) t.fail(tag + ": wrong coefficients");
      if (!q || *q != hook_expansion(n, c)) {
        t.fail(tag + ": expansion is not sum c_k s_{N-k,1^k}");
      }
      if (n < 3) continue;
      DescentVector bad = v;
      bad.add(StatSet(n, {1}));
      ++negatives;
      if (hook_criterion(bad).holds) t.fail(tag + ": perturbation accepted");
    }
  }
  r.data = {{"families", families}, {"negative_instances", negatives}};
  finish(r, t, std::to_string(families) + " families, " +
                   std::to_string(negatives) + " negatives rejected, " +
                   bound("N", top));
  return r;
}

// ---------------------------------------------------------------------------

std::vector<NamedCheck> all_checks() {
  return {{"two-row-expansion", check_two_row_expansion},
          {"sparse-criterion", check_sparse_criterion},
          {"bijection", check_bijection},
          {"move-classes", check_move_classes},
          {"bessel", check_bessel},
          {"singleton-patterns", check_singleton_patterns},
          {"refinements", check_refinements},
          {"schreier", check_schreier},
          {"hook-criterion", check_hook_criterion}};
}

std::vector<CheckResult> run_checks(
    const VerifyOptions& opt,
    const std::function<void(const CheckResult&)>& on_result) {
  std::vector<CheckResult> out;
  for (const NamedCheck& check : all_checks()) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = check.run(opt);
    } catch (const std::exception& e) {
      r.id = check.id;
      r.title = check.id;
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace matchsym
