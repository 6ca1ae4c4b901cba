#include <algorithm>
#include <future>
#include <map>
#include <set>

#include "causalchop/chop.hpp"

namespace causalchop {

Region Chopping::piece(const std::vector<StringGeom>& config, int i, int alpha) const {
  const auto& ci = cuts[static_cast<size_t>(i)];
  const StringGeom& s = config[static_cast<size_t>(i)];
  const Rational lo = alpha == 0 ? Rational(0) : ci[static_cast<size_t>(alpha - 1)];
  if (alpha == static_cast<int>(ci.size()))
    return Region::piece(Piece(s, lo, std::nullopt));
  return Region::piece(Piece(s, lo, ci[static_cast<size_t>(alpha)]));
}

namespace {

// Pairwise later-matrix over all pieces of a configuration's chopping.
struct PairMatrix {
  // later[i][a][j][b]: piece a of string i later than piece b of string j.
  std::vector<std::vector<std::vector<std::vector<char>>>> later;
};

PairMatrix build_matrix(const std::vector<StringGeom>& config, const Chopping& chop,
                        int jobs) {
  const int n = static_cast<int>(config.size());
  std::vector<std::vector<Region>> pieces(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < chop.num_pieces(i); ++a)
      pieces[static_cast<size_t>(i)].push_back(chop.piece(config, i, a));

  PairMatrix m;
  m.later.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    m.later[i].resize(pieces[i].size());
    for (size_t a = 0; a < pieces[i].size(); ++a) {
      m.later[i][a].resize(static_cast<size_t>(n));
      for (int j = 0; j < n; ++j)
        m.later[i][a][static_cast<size_t>(j)].resize(
            j == i ? 0 : pieces[static_cast<size_t>(j)].size());
    }
  }
  struct Job {
    int i, j;
    size_t a, b;
  };
  std::vector<Job> todo;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        for (size_t a = 0; a < pieces[i].size(); ++a)
          for (size_t b = 0; b < pieces[static_cast<size_t>(j)].size(); ++b)
            todo.push_back({i, j, a, b});
  auto run = [&](size_t from, size_t to) {
    for (size_t k = from; k < to; ++k) {
      const Job& jb = todo[k];
      m.later[jb.i][jb.a][static_cast<size_t>(jb.j)][jb.b] =
          later_region(pieces[jb.i][jb.a], pieces[static_cast<size_t>(jb.j)][jb.b]) ? 1 : 0;
    }
  };
  if (jobs <= 1 || todo.size() < 32) {
    run(0, todo.size());
  } else {
    const size_t width = static_cast<size_t>(jobs);
    std::vector<std::future<void>> fs;
    const size_t chunk = (todo.size() + width - 1) / width;
    for (size_t w = 0; w < width; ++w) {
      const size_t from = w * chunk;
      const size_t to = std::min(todo.size(), from + chunk);
      if (from < to) fs.push_back(std::async(std::launch::async, run, from, to));
    }
    for (auto& f : fs) f.get();
  }
  return m;
}

// Latest member of the sub-tuple given by `mask` (bit i set = string i with
// piece tuple[i]), smallest index first; -1 if none.
int tuple_latest(const PairMatrix& m, const std::vector<int>& tuple, unsigned mask) {
  const int n = static_cast<int>(tuple.size());
  for (int i = 0; i < n; ++i) {
    if (!(mask & (1u << i))) continue;
    bool all = true;
    for (int j = 0; j < n && all; ++j) {
      if (i == j || !(mask & (1u << j))) continue;
      if (!m.later[i][static_cast<size_t>(tuple[i])][static_cast<size_t>(j)]
                  [static_cast<size_t>(tuple[j])])
        all = false;
    }
    if (all) return i;
  }
  return -1;
}

bool next_tuple(std::vector<int>& tuple, const std::vector<int>& sizes) {
  for (int i = static_cast<int>(tuple.size()) - 1; i >= 0; --i) {
    if (++tuple[static_cast<size_t>(i)] < sizes[static_cast<size_t>(i)]) return true;
    tuple[static_cast<size_t>(i)] = 0;
  }
  return false;
}

}  // namespace

std::pair<Chopping, LatestTable> chop_n(const std::vector<StringGeom>& config,
                                        const ChopOptions& opts) {
  const int n = static_cast<int>(config.size());
  if (n < 2) throw PreconditionViolated("chop_n requires n >= 2 strings");
  if (auto pair = diagonal_pair(config))
    throw OnDiagonal("configuration on the large string diagonal", pair->first,
                     pair->second);

  // A configuration whose whole strings already carry a latest member (on
  // every subfamily when hereditary) needs no cuts at all.
  {
    Chopping trivial;
    trivial.cuts.assign(static_cast<size_t>(n), {});
    const PairMatrix m = build_matrix(config, trivial, opts.jobs);
    const std::vector<int> tuple(static_cast<size_t>(n), 0);
    const unsigned full = (1u << n) - 1;
    bool ok = tuple_latest(m, tuple, full) >= 0;
    if (ok && opts.hereditary)
      for (unsigned mask = 1; mask <= full && ok; ++mask)
        if (tuple_latest(m, tuple, mask) < 0) ok = false;
    if (ok) {
      LatestTable table;
      table.entries.emplace_back(tuple, tuple_latest(m, tuple, full));
      return {std::move(trivial), std::move(table)};
    }
  }

  // Group equal directions (same projective direction, same orientation);
  // coinciding directions share one cone.
  std::vector<int> cls(static_cast<size_t>(n), -1);
  std::vector<int> reps;
  for (int i = 0; i < n; ++i) {
    for (size_t k = 0; k < reps.size(); ++k) {
      const ExactVector& r = config[static_cast<size_t>(reps[k])].dir;
      if (parallel(r, config[static_cast<size_t>(i)].dir) &&
          mdot(r, config[static_cast<size_t>(i)].dir).sign() < 0) {
        // Negative Minkowski product of parallel spacelike vectors means the
        // same orientation (e.e = -a < 0).
        cls[static_cast<size_t>(i)] = static_cast<int>(k);
        break;
      }
    }
    if (cls[static_cast<size_t>(i)] < 0) {
      cls[static_cast<size_t>(i)] = static_cast<int>(reps.size());
      reps.push_back(i);
    }
  }
  const int nc = static_cast<int>(reps.size());

  // Shrink the direction cones until every subfamily of classes has a latest
  // member under the cone order (tip posteriority on the direction manifold).
  std::vector<DirectionCone> cones;
  int level = 0;
  for (int attempt = 0;; ++attempt, ++level) {
    if (attempt > 96)
      throw InternalVerificationFailure("direction cone shrinking did not stabilize");
    cones.clear();
    for (int k = 0; k < nc; ++k)
      cones.push_back(make_direction_cone(config[static_cast<size_t>(reps[k])].dir, level));
    std::vector<std::vector<char>> later_cls(static_cast<size_t>(nc),
                                             std::vector<char>(static_cast<size_t>(nc), 0));
    for (int k = 0; k < nc; ++k)
      for (int l = 0; l < nc; ++l)
        if (k != l)
          later_cls[k][l] =
              dir_later(cones[static_cast<size_t>(k)].tip_past,
                        cones[static_cast<size_t>(l)].tip_future)
                  ? 1
                  : 0;
    bool ok = true;
    for (unsigned mask = 1; mask < (1u << nc) && ok; ++mask) {
      bool has = false;
      for (int k = 0; k < nc && !has; ++k) {
        if (!(mask & (1u << k))) continue;
        bool all = true;
        for (int l = 0; l < nc && all; ++l)
          if (l != k && (mask & (1u << l)) && !later_cls[k][l]) all = false;
        has = all;
      }
      ok = has;
    }
    if (ok) break;
  }

  // Cut each tail inside its class cone.
  Chopping chop;
  chop.cuts.assign(static_cast<size_t>(n), {});
  for (int i = 0; i < n; ++i)
    chop.cuts[static_cast<size_t>(i)] = {
        tail_cut(config[static_cast<size_t>(i)], cones[static_cast<size_t>(cls[i])])};

  // Refinement loop over the finite segments.
  for (int round = 0;; ++round) {
    const PairMatrix m = build_matrix(config, chop, opts.jobs);
    std::vector<int> sizes(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) sizes[static_cast<size_t>(i)] = chop.num_pieces(i);

    std::vector<std::vector<int>> failing;
    std::vector<int> tuple(static_cast<size_t>(n), 0);
    const unsigned full = (1u << n) - 1;
    do {
      bool ok = tuple_latest(m, tuple, full) >= 0;
      if (ok && opts.hereditary) {
        for (unsigned mask = 1; mask <= full && ok; ++mask)
          if (tuple_latest(m, tuple, mask) < 0) ok = false;
      }
      if (!ok) failing.push_back(tuple);
    } while (next_tuple(tuple, sizes));

    if (failing.empty()) {
      LatestTable table;
      std::fill(tuple.begin(), tuple.end(), 0);
      do {
        table.entries.emplace_back(tuple, tuple_latest(m, tuple, full));
      } while (next_tuple(tuple, sizes));
      return {std::move(chop), std::move(table)};
    }
    if (round >= opts.refine_limit)
      throw RefinementLimitExceeded("refinement limit exceeded", failing.front());

    // Bisect every finite piece participating in a failing tuple.
    std::vector<std::set<Rational>> new_cuts(static_cast<size_t>(n));
    for (const auto& t : failing) {
      for (int i = 0; i < n; ++i) {
        const int alpha = t[static_cast<size_t>(i)];
        const auto& ci = chop.cuts[static_cast<size_t>(i)];
        if (alpha == static_cast<int>(ci.size())) continue;  // infinite tail
        const Rational lo = alpha == 0 ? Rational(0) : ci[static_cast<size_t>(alpha - 1)];
        const Rational hi = ci[static_cast<size_t>(alpha)];
        new_cuts[static_cast<size_t>(i)].insert((lo + hi) / Rational(2));
      }
    }
    for (int i = 0; i < n; ++i) {
      auto& ci = chop.cuts[static_cast<size_t>(i)];
      ci.insert(ci.end(), new_cuts[static_cast<size_t>(i)].begin(),
                new_cuts[static_cast<size_t>(i)].end());
      std::sort(ci.begin(), ci.end());
    }
  }
}

VerifyReport verify_chopping(const std::vector<StringGeom>& config,
                             const Chopping& chopping, const LatestTable& table) {
  VerifyReport report;
  const int n = static_cast<int>(config.size());
  if (static_cast<int>(chopping.cuts.size()) != n) {
    report.structural_errors.push_back("CutListMismatch");
    return report;
  }
  for (int i = 0; i < n; ++i) {
    const auto& ci = chopping.cuts[static_cast<size_t>(i)];
    Rational prev(0);
    for (const Rational& c : ci) {
      if (!(c > prev)) {
        report.structural_errors.push_back("UnsortedCuts at string " + std::to_string(i));
        return report;
      }
      prev = c;
    }
  }
  if (n >= 2) {
    if (auto pair = diagonal_pair(config)) {
      report.structural_errors.push_back("OnDiagonal pair " + std::to_string(pair->first) +
                                         "," + std::to_string(pair->second));
      return report;
    }
  }
  // Expected tuple universe.
  std::vector<int> sizes(static_cast<size_t>(n));
  size_t expect = 1;
  for (int i = 0; i < n; ++i) {
    sizes[static_cast<size_t>(i)] = chopping.num_pieces(i);
    expect *= static_cast<size_t>(sizes[static_cast<size_t>(i)]);
  }
  std::set<std::vector<int>> seen;
  for (const auto& [tuple, index] : table.entries) {
    if (static_cast<int>(tuple.size()) != n || index < 0 || index >= n) {
      report.structural_errors.push_back("MalformedEntry");
      continue;
    }
    bool in_range = true;
    for (int i = 0; i < n; ++i)
      if (tuple[static_cast<size_t>(i)] < 0 ||
          tuple[static_cast<size_t>(i)] >= sizes[static_cast<size_t>(i)])
        in_range = false;
    if (!in_range) {
      report.structural_errors.push_back("TupleOutOfRange");
      continue;
    }
    seen.insert(tuple);
    VerifyReport::TupleCheck check;
    check.tuple = tuple;
    check.index = index;
    check.pass = true;
    const Region latest = chopping.piece(config, index, tuple[static_cast<size_t>(index)]);
    for (int j = 0; j < n; ++j) {
      if (j == index) continue;
      const Region other = chopping.piece(config, j, tuple[static_cast<size_t>(j)]);
      if (!later_region(latest, other)) {
        check.pass = false;
        check.reason = "piece " + std::to_string(index) + " not later than piece of string " +
                       std::to_string(j);
        break;
      }
    }
    report.checks.push_back(std::move(check));
  }
  if (seen.size() != expect)
    report.structural_errors.push_back("MissingTuple: " + std::to_string(seen.size()) +
                                       " of " + std::to_string(expect));
  report.pass = report.structural_errors.empty() &&
                std::all_of(report.checks.begin(), report.checks.end(),
                            [](const auto& c) { return c.pass; });
  return report;
}

}  // namespace causalchop
