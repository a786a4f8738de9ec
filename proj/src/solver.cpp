#include "relgw/solver.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "relgw/theta_ring.hpp"

namespace relgw {

namespace {

using Multiplier = ThetaMultiplier<SymbolicMode>;
using EquationSet = std::map<LinForm, Provenance>;

void insert_min(EquationSet& set, LinForm form, const Provenance& where) {
  auto [it, inserted] = set.try_emplace(std::move(form), where);
  if (!inserted && where < it->second) it->second = where;
}

// (theta_p theta_q) theta_r - theta_p (theta_q theta_r)
ThetaElement<LinForm> associator(Multiplier& ring, int p, int q, int r) {
  auto lhs = ring.mul(ring.basis(p, q), ring.theta(r));
  auto rhs = ring.mul(ring.theta(p), ring.basis(q, r));
  return lhs - rhs;
}

void collect_triple(Multiplier& ring, int degree, int p, int q, int r, EquationSet& out) {
  const auto diff = associator(ring, p, q, r);
  for (const auto& [s, series] : diff.terms()) {
    for (int k = 0; k < degree; ++k) {
      if (!series[k].is_zero()) {
        const Provenance where{p, q, r, s, k};
        throw SolveError(SolveError::Reason::LowerDegreeResidue, degree,
                         "solved lower-degree invariants violate associativity: " + series[k].str() +
                             " != 0 at " + where.str());
      }
    }
    const LinForm& row = series[degree];
    if (!row.is_zero()) insert_min(out, row.normalized(), Provenance{p, q, r, s, degree});
  }
}

void check_triple_bound(int degree, int triple_bound) {
  if (degree < 1) throw Error("degree must be >= 1, got " + std::to_string(degree));
  if (triple_bound < 1) throw Error("triple bound must be >= 1, got " + std::to_string(triple_bound));
}

}  // namespace

std::string Provenance::str() const {
  return "(p=" + std::to_string(p) + ", q=" + std::to_string(q) + ", r=" + std::to_string(r) +
         ", theta=" + std::to_string(theta_index) + ", t^" + std::to_string(t_power) + ")";
}

std::string Equation::str() const { return lhs_minus_rhs.str() + " = 0  " + provenance.str(); }

SolveError::SolveError(Reason reason, int degree, const std::string& detail, SolveReport report,
                       std::vector<UnknownId> free_unknowns, std::optional<Provenance> violated)
    : Error("degree " + std::to_string(degree) + ": " + detail),
      reason_(reason),
      degree_(degree),
      report_(std::move(report)),
      free_(std::move(free_unknowns)),
      violated_(violated) {}

LinForm associativity_row(int degree, const InvariantTable& table, int p, int q, int r, int s,
                          const Assignment& pins) {
  Multiplier ring(SymbolicMode(table, degree, pins), degree);
  return associator(ring, p, q, r).coefficient(s, degree);
}

std::vector<Equation> generate_equations(int degree, const InvariantTable& table, int triple_bound,
                                         const Assignment& pins, unsigned jobs) {
  check_triple_bound(degree, triple_bound);
  if (table.solved_through_degree() < degree - 1) throw UnsolvedDegree(degree - 1, table.solved_through_degree());

  const SymbolicMode mode(table, degree, pins);
  EquationSet merged;
  jobs = std::clamp(jobs, 1U, static_cast<unsigned>(triple_bound));
  if (jobs == 1) {
    Multiplier ring(mode, degree);
    for (int p = 1; p <= triple_bound; ++p)
      for (int q = 1; q <= triple_bound; ++q)
        for (int r = 1; r <= triple_bound; ++r) collect_triple(ring, degree, p, q, r, merged);
  } else {
    // Worker w takes the first indices p = w+1, w+1+jobs, ...
    std::vector<EquationSet> partial(jobs);
    std::vector<std::exception_ptr> failures(jobs);
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          Multiplier ring(mode, degree);
          for (int p = static_cast<int>(w) + 1; p <= triple_bound; p += static_cast<int>(jobs))
            for (int q = 1; q <= triple_bound; ++q)
              for (int r = 1; r <= triple_bound; ++r) collect_triple(ring, degree, p, q, r, partial[w]);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
    for (auto& t : workers) t.join();
    for (const auto& f : failures) {
      if (f) std::rethrow_exception(f);
    }
    for (auto& set : partial) {
      for (auto& [form, where] : set) insert_min(merged, form, where);
    }
  }

  std::vector<Equation> out;
  out.reserve(merged.size());
  for (auto& [form, where] : merged) out.push_back({form, where});
  std::sort(out.begin(), out.end(),
            [](const Equation& a, const Equation& b) { return a.provenance < b.provenance; });
  return out;
}

EliminationResult eliminate(const std::vector<LinForm>& rows, const std::vector<UnknownId>& unknowns) {
  std::map<UnknownId, std::size_t> column;
  for (std::size_t j = 0; j < unknowns.size(); ++j) column.emplace(unknowns[j], j);
  const std::size_t n = unknowns.size();

  // Dense augmented matrix [A | b] for A x = b, b = -constant.
  std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(n + 1));
  std::vector<std::size_t> origin(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    origin[i] = i;
    for (const auto& [id, c] : rows[i].terms()) {
      auto it = column.find(id);
      if (it == column.end()) throw Error("equation mentions " + id.key() + " which is not a listed unknown");
      m[i][it->second] = c;
    }
    m[i][n] = -rows[i].constant();
  }

  auto support = [&](std::size_t i) {
    return std::count_if(m[i].begin(), m[i].end() - 1, [](const Rational& x) { return !x.is_zero(); });
  };

  EliminationResult result;
  std::vector<std::size_t> pivot_column;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m.size(); ++col) {
    // Pivot: the sparsest remaining row with a nonzero entry here.
    std::optional<std::size_t> pivot;
    std::ptrdiff_t best = 0;
    for (std::size_t i = rank; i < m.size(); ++i) {
      if (m[i][col].is_zero()) continue;
      const auto s = support(i);
      if (!pivot || s < best) {
        pivot = i;
        best = s;
      }
    }
    if (!pivot) continue;
    std::swap(m[rank], m[*pivot]);
    std::swap(origin[rank], origin[*pivot]);
    const Rational inv = Rational(1) / m[rank][col];
    for (auto& x : m[rank]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][col].is_zero()) continue;
      const Rational factor = m[i][col];
      for (std::size_t j = col; j <= n; ++j) {
        if (!m[rank][j].is_zero()) m[i][j] -= factor * m[rank][j];
      }
    }
    pivot_column.push_back(col);
    ++rank;
  }
  result.rank = rank;

  for (std::size_t i = rank; i < m.size(); ++i) {
    if (!m[i][n].is_zero()) {
      result.inconsistent_row = origin[i];
      break;
    }
  }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_column) is_pivot[c] = true;
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_pivot[j]) result.free_unknowns.push_back(unknowns[j]);
  }
  if (!result.inconsistent_row && result.free_unknowns.empty()) {
    for (std::size_t i = 0; i < rank; ++i) result.solution.emplace(unknowns[pivot_column[i]], m[i][n]);
  }
  return result;
}

SolveReport solve_with_pins(int degree, const InvariantTable& table, const Assignment& pins, int triple_bound,
                            unsigned jobs) {
  check_triple_bound(degree, triple_bound);
  if (table.solved_through_degree() != degree - 1) {
    throw Error("solve_degree(" + std::to_string(degree) + ") needs a table solved through degree " +
                std::to_string(degree - 1) + ", have " + std::to_string(table.solved_through_degree()));
  }

  SolveReport report;
  report.degree = degree;
  report.triple_bound = triple_bound;
  report.pinned = pins;
  for (const auto& [id, value] : pins) {
    if (id.degree() != degree) throw Error("pinned " + id.key() + " is not a degree-" + std::to_string(degree) + " invariant");
  }

  std::vector<UnknownId> unknowns;
  for (const auto& id : unknowns_at_degree(degree)) {
    if (!report.pinned.contains(id)) unknowns.push_back(id);
  }
  report.num_unknowns = unknowns.size();

  report.equations = generate_equations(degree, table, triple_bound, report.pinned, jobs);
  report.num_equations = report.equations.size();

  std::vector<LinForm> rows;
  rows.reserve(report.equations.size());
  for (const auto& e : report.equations) rows.push_back(e.lhs_minus_rhs);
  const auto elimination = eliminate(rows, unknowns);
  report.rank = elimination.rank;

  if (elimination.inconsistent_row) {
    const auto& bad = report.equations[*elimination.inconsistent_row];
    throw SolveError(SolveError::Reason::Inconsistent, degree, "inconsistent system, violated " + bad.str(),
                     report, {}, bad.provenance);
  }
  if (!elimination.free_unknowns.empty()) {
    std::string names;
    for (const auto& id : elimination.free_unknowns) names += (names.empty() ? "" : ", ") + id.key();
    throw SolveError(SolveError::Reason::RankDeficient, degree,
                     "rank deficient (rank " + std::to_string(elimination.rank) + " of " +
                         std::to_string(unknowns.size()) + "), free: " + names,
                     report, elimination.free_unknowns);
  }

  report.solution = elimination.solution;
  for (const auto& [id, value] : report.pinned) report.solution.emplace(id, value);

  // Independent of the elimination: every row must vanish at the solution.
  for (const auto& e : report.equations) {
    const auto value = e.lhs_minus_rhs.evaluate(report.solution);
    if (!value || !value->is_zero()) {
      throw SolveError(SolveError::Reason::Inconsistent, degree, "solution does not satisfy " + e.str(), report,
                       {}, e.provenance);
    }
  }
  report.consistent = true;
  return report;
}

SolveReport solve_degree(int degree, const InvariantTable& table, const Seeds& seeds, int triple_bound,
                         unsigned jobs) {
  check_triple_bound(degree, triple_bound);
  const Assignment pins{{UnknownId::two_point(3 * degree - 1, 1), seeds.top},
                        {UnknownId::two_point(1, 3 * degree - 1), seeds.bottom}};
  return solve_with_pins(degree, table, pins, triple_bound, jobs);
}

ComputeResult compute_up_to(int max_degree, const SlabCoefficients& slab, const ComputeOptions& options) {
  if (max_degree < 1) throw Error("max degree must be >= 1, got " + std::to_string(max_degree));
  for (int d = 1; d <= max_degree; ++d) slab.at(d);

  ComputeResult result;
  for (int d = 1; d <= max_degree; ++d) {
    const Rational top = seed_top(d, slab);
    const Seeds seeds{top, seed_bottom(d, top)};
    int bound = options.triple_bound.value_or(3 * d);
    for (int attempt = 0;; ++attempt) {
      try {
        result.reports.push_back(solve_degree(d, result.table, seeds, bound, options.jobs));
        break;
      } catch (const SolveError& e) {
        if (e.reason() != SolveError::Reason::RankDeficient || attempt >= options.max_bound_escalation) throw;
        if (options.log) {
          options.log("degree " + std::to_string(d) + ": rank deficient at triple bound " + std::to_string(bound) +
                      ", retrying with " + std::to_string(bound + 1));
        }
        ++bound;
      }
    }
    result.table.commit_degree(d, result.reports.back().solution);
  }
  return result;
}

bool verify_degree_two_relations(const InvariantTable& table) {
  if (table.solved_through_degree() < 2) return false;
  const Rational n15 = table.two_point(1, 5);
  const Rational n51 = table.two_point(5, 1);
  const Rational n24 = table.two_point(2, 4);
  const Rational n33 = table.two_point(3, 3);
  const Rational n42 = table.two_point(4, 2);
  return Rational(25) * n15 == n51 && Rational(2) * n24 == Rational(5) * n15 + Rational(2) &&
         n33 == Rational(5) * n15 + Rational(4) && n42 == Rational(10) * n15 + Rational(4);
}

}  // namespace relgw
