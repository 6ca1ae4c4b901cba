#include "causalchop/wick.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace causalchop {

namespace {

bool term_struct_less(const WickExpression::Term& a, const WickExpression::Term& b) {
  if (a.props.size() != b.props.size()) return a.props.size() < b.props.size();
  if (a.props != b.props) return a.props < b.props;
  return a.normal < b.normal;
}

bool next_tuple(std::vector<int>& tuple, const std::vector<int>& sizes) {
  for (int i = static_cast<int>(tuple.size()) - 1; i >= 0; --i) {
    if (++tuple[static_cast<size_t>(i)] < sizes[static_cast<size_t>(i)]) return true;
    tuple[static_cast<size_t>(i)] = 0;
  }
  return false;
}

}  // namespace

void WickExpression::canonicalize() {
  for (Term& t : terms) {
    std::sort(t.props.begin(), t.props.end());
    std::sort(t.normal.begin(), t.normal.end());
  }
  std::sort(terms.begin(), terms.end(), term_struct_less);
  std::vector<Term> merged;
  for (Term& t : terms) {
    if (!merged.empty() && merged.back().props == t.props &&
        merged.back().normal == t.normal)
      merged.back().coef += t.coef;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.coef.is_zero(); });
  terms = std::move(merged);
}

bool operator==(const WickExpression& a, const WickExpression& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (size_t k = 0; k < a.terms.size(); ++k) {
    const auto& ta = a.terms[k];
    const auto& tb = b.terms[k];
    if (ta.coef != tb.coef || ta.props != tb.props || ta.normal != tb.normal)
      return false;
  }
  return true;
}

std::string WickExpression::pretty() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms) {
    if (!first) os << " + ";
    first = false;
    bool printed = false;
    if (t.coef != Rational(1) || (t.props.empty() && t.normal.empty())) {
      os << t.coef.str();
      printed = true;
    }
    for (const PropagatorSymbol& p : t.props) {
      if (printed) os << " ";
      printed = true;
      switch (p.kind) {
        case PropagatorSymbol::Kind::TwoPoint:
          os << "<phi(" << p.i << ")phi(" << p.j << ")>";
          break;
        case PropagatorSymbol::Kind::Feynman:
          os << "<T phi(" << p.i << ")phi(" << p.j << ")>";
          break;
        case PropagatorSymbol::Kind::SegmentTwoPoint:
          os << "<T phi^" << p.alpha << "(" << p.i << ")phi^" << p.beta << "("
             << p.j << ")>";
          break;
      }
    }
    if (!t.normal.empty()) {
      if (printed) os << " ";
      os << ":";
      for (const FieldSymbol& f : t.normal) {
        os << f.label;
        if (f.piece >= 0) os << "^" << f.piece;
        os << "(" << f.vertex << ")";
      }
      os << ":";
    }
  }
  return os.str();
}

WickExpression operator+(const WickExpression& a, const WickExpression& b) {
  WickExpression out;
  out.terms = a.terms;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  out.canonicalize();
  return out;
}

WickExpression scaled(const Rational& c, const WickExpression& e) {
  WickExpression out = e;
  for (auto& t : out.terms) t.coef *= c;
  out.canonicalize();
  return out;
}

WickExpression tensor_merge(const WickExpression& a, const WickExpression& b) {
  WickExpression out;
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms) {
      WickExpression::Term t;
      t.coef = ta.coef * tb.coef;
      t.props = ta.props;
      t.props.insert(t.props.end(), tb.props.begin(), tb.props.end());
      t.normal = ta.normal;
      t.normal.insert(t.normal.end(), tb.normal.begin(), tb.normal.end());
      out.terms.push_back(std::move(t));
    }
  out.canonicalize();
  return out;
}

std::vector<ContractionGraph> enumerate_graphs(int n) {
  if (n < 0) throw PreconditionViolated("enumerate_graphs needs n >= 0");
  std::vector<ContractionGraph> out;
  std::vector<int> vertices(static_cast<size_t>(n));
  for (int v = 1; v <= n; ++v) vertices[static_cast<size_t>(v - 1)] = v;
  ContractionGraph cur;
  auto rec = [&](auto&& self, std::vector<int> rest) -> void {
    if (rest.empty()) {
      ContractionGraph g = cur;
      std::sort(g.internal.begin(), g.internal.end());
      std::sort(g.external.begin(), g.external.end());
      out.push_back(std::move(g));
      return;
    }
    const int v = rest.front();
    std::vector<int> tail(rest.begin() + 1, rest.end());
    cur.external.push_back(v);
    self(self, tail);
    cur.external.pop_back();
    for (size_t k = 0; k < tail.size(); ++k) {
      std::vector<int> rest2;
      for (size_t m = 0; m < tail.size(); ++m)
        if (m != k) rest2.push_back(tail[m]);
      cur.internal.emplace_back(v, tail[k]);
      self(self, rest2);
      cur.internal.pop_back();
    }
  };
  rec(rec, vertices);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

PropagatorSymbol contract(const FieldSymbol& left, const FieldSymbol& right) {
  if (left.piece < 0 && right.piece < 0)
    return PropagatorSymbol::two_point(left.vertex, right.vertex);
  return PropagatorSymbol::segment(left.vertex, left.piece, right.vertex, right.piece);
}

}  // namespace

WickExpression normal_order_product(const std::vector<FieldSymbol>& word) {
  WickExpression out;
  const int n = static_cast<int>(word.size());
  // Matchings over positions; the earlier position is the left argument.
  ContractionGraph cur;
  auto rec = [&](auto&& self, std::vector<int> rest) -> void {
    if (rest.empty()) {
      WickExpression::Term t;
      t.coef = Rational(1);
      for (const auto& [p, q] : cur.internal)
        t.props.push_back(contract(word[static_cast<size_t>(p)], word[static_cast<size_t>(q)]));
      for (int p : cur.external) t.normal.push_back(word[static_cast<size_t>(p)]);
      out.terms.push_back(std::move(t));
      return;
    }
    const int p = rest.front();
    std::vector<int> tail(rest.begin() + 1, rest.end());
    cur.external.push_back(p);
    self(self, tail);
    cur.external.pop_back();
    for (size_t k = 0; k < tail.size(); ++k) {
      std::vector<int> rest2;
      for (size_t m = 0; m < tail.size(); ++m)
        if (m != k) rest2.push_back(tail[m]);
      cur.internal.emplace_back(p, tail[k]);
      self(self, rest2);
      cur.internal.pop_back();
    }
  };
  std::vector<int> positions(static_cast<size_t>(n));
  for (int p = 0; p < n; ++p) positions[static_cast<size_t>(p)] = p;
  rec(rec, positions);
  out.canonicalize();
  return out;
}

WickExpression t_product_closed(const std::vector<StringGeom>& config) {
  const int n = static_cast<int>(config.size());
  if (n >= 2) {
    if (auto pair = diagonal_pair(config))
      throw OnDiagonal("configuration on the large string diagonal", pair->first,
                       pair->second);
  }
  WickExpression out;
  for (const ContractionGraph& g : enumerate_graphs(n)) {
    WickExpression::Term t;
    t.coef = Rational(1);
    for (const auto& [i, j] : g.internal)
      t.props.push_back(PropagatorSymbol::feynman(i, j));
    for (int v : g.external) t.normal.push_back(FieldSymbol{v, -1});
    out.terms.push_back(std::move(t));
  }
  out.canonicalize();
  return out;
}

namespace {

// Segment resummation: rewrite rules fire only when the full sum over a
// string's pieces is present with one common coefficient.
struct TermKey {
  Rational coef;
  std::vector<PropagatorSymbol> props;
  std::vector<FieldSymbol> normal;
  bool operator<(const TermKey& o) const {
    if (props != o.props) return props < o.props;
    if (normal != o.normal) return normal < o.normal;
    return coef < o.coef;
  }
};

bool fire_external(WickExpression& e, int vertex, int piece_count) {
  std::map<TermKey, std::map<int, std::vector<size_t>>> groups;
  for (size_t idx = 0; idx < e.terms.size(); ++idx) {
    const auto& t = e.terms[idx];
    for (size_t f = 0; f < t.normal.size(); ++f) {
      if (t.normal[f].vertex != vertex || t.normal[f].piece < 0) continue;
      TermKey key{t.coef, t.props, t.normal};
      key.normal.erase(key.normal.begin() + static_cast<long>(f));
      groups[key][t.normal[f].piece].push_back(idx);
      break;  // a vertex appears at most once per term
    }
  }
  for (auto& [key, by_piece] : groups) {
    if (static_cast<int>(by_piece.size()) != piece_count) continue;
    std::set<size_t> drop;
    for (auto& [piece, idxs] : by_piece) drop.insert(idxs.front());
    WickExpression::Term merged;
    merged.coef = key.coef;
    merged.props = key.props;
    merged.normal = key.normal;
    merged.normal.push_back(FieldSymbol{vertex, -1});
    WickExpression out;
    for (size_t idx = 0; idx < e.terms.size(); ++idx)
      if (!drop.count(idx)) out.terms.push_back(e.terms[idx]);
    out.terms.push_back(std::move(merged));
    out.canonicalize();
    e = std::move(out);
    return true;
  }
  return false;
}

bool fire_prop(WickExpression& e, int vi, int vj, int count_i, int count_j) {
  std::map<TermKey, std::map<std::pair<int, int>, std::vector<size_t>>> groups;
  for (size_t idx = 0; idx < e.terms.size(); ++idx) {
    const auto& t = e.terms[idx];
    for (size_t p = 0; p < t.props.size(); ++p) {
      const PropagatorSymbol& ps = t.props[p];
      if (ps.kind != PropagatorSymbol::Kind::SegmentTwoPoint) continue;
      int a, b;
      if (ps.i == vi && ps.j == vj) {
        a = ps.alpha;
        b = ps.beta;
      } else if (ps.i == vj && ps.j == vi) {
        a = ps.beta;
        b = ps.alpha;
      } else {
        continue;
      }
      TermKey key{t.coef, t.props, t.normal};
      key.props.erase(key.props.begin() + static_cast<long>(p));
      groups[key][{a, b}].push_back(idx);
      break;  // one segment propagator per vertex pair per term
    }
  }
  for (auto& [key, by_pieces] : groups) {
    if (static_cast<int>(by_pieces.size()) != count_i * count_j) continue;
    std::set<size_t> drop;
    for (auto& [ab, idxs] : by_pieces) drop.insert(idxs.front());
    WickExpression::Term merged;
    merged.coef = key.coef;
    merged.props = key.props;
    merged.props.push_back(PropagatorSymbol::feynman(vi, vj));
    merged.normal = key.normal;
    WickExpression out;
    for (size_t idx = 0; idx < e.terms.size(); ++idx)
      if (!drop.count(idx)) out.terms.push_back(e.terms[idx]);
    out.terms.push_back(std::move(merged));
    out.canonicalize();
    e = std::move(out);
    return true;
  }
  return false;
}

void resum_segments(WickExpression& e, const std::vector<int>& piece_counts) {
  const int n = static_cast<int>(piece_counts.size());
  bool fired = true;
  while (fired) {
    fired = false;
    for (int v = 1; v <= n && !fired; ++v)
      fired = fire_external(e, v, piece_counts[static_cast<size_t>(v - 1)]);
    for (int i = 1; i <= n && !fired; ++i)
      for (int j = i + 1; j <= n && !fired; ++j)
        fired = fire_prop(e, i, j, piece_counts[static_cast<size_t>(i - 1)],
                          piece_counts[static_cast<size_t>(j - 1)]);
  }
}

}  // namespace

WickExpression t_product_with_chopping(const std::vector<StringGeom>& config,
                                       Chopping chopping, int refine_limit) {
  const int n = static_cast<int>(config.size());
  if (n == 0) return WickExpression::unit();
  if (n == 1) {
    WickExpression e;
    e.terms.push_back({Rational(1), {}, {FieldSymbol{1, -1}}});
    e.canonicalize();
    return e;
  }
  if (auto pair = diagonal_pair(config))
    throw OnDiagonal("configuration on the large string diagonal", pair->first,
                     pair->second);

  for (int round = 0;; ++round) {
    std::vector<std::vector<Region>> pieces(static_cast<size_t>(n));
    std::vector<int> sizes(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      sizes[static_cast<size_t>(i)] = chopping.num_pieces(i);
      for (int a = 0; a < sizes[static_cast<size_t>(i)]; ++a)
        pieces[static_cast<size_t>(i)].push_back(chopping.piece(config, i, a));
    }
    // Pairwise later-matrix between pieces of distinct strings.
    std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, bool> later;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j)
          for (int a = 0; a < sizes[static_cast<size_t>(i)]; ++a)
            for (int b = 0; b < sizes[static_cast<size_t>(j)]; ++b)
              later[{{i, a}, {j, b}}] = later_region(pieces[static_cast<size_t>(i)][a],
                                                     pieces[static_cast<size_t>(j)][b]);

    WickExpression total;
    std::vector<int> tuple(static_cast<size_t>(n), 0);
    std::vector<std::vector<int>> failing;
    do {
      // Iterated pull-out: order the tuple's pieces latest-first.
      std::vector<int> order;
      std::vector<char> used(static_cast<size_t>(n), 0);
      bool ok = true;
      for (int step = 0; step < n && ok; ++step) {
        int pick = -1;
        for (int i = 0; i < n && pick < 0; ++i) {
          if (used[static_cast<size_t>(i)]) continue;
          bool all = true;
          for (int j = 0; j < n && all; ++j) {
            if (j == i || used[static_cast<size_t>(j)]) continue;
            if (!later.at({{i, tuple[static_cast<size_t>(i)]},
                           {j, tuple[static_cast<size_t>(j)]}}))
              all = false;
          }
          if (all) pick = i;
        }
        if (pick < 0)
          ok = false;
        else {
          order.push_back(pick);
          used[static_cast<size_t>(pick)] = 1;
        }
      }
      if (!ok) {
        failing.push_back(tuple);
        continue;
      }
      std::vector<FieldSymbol> word;
      for (int i : order)
        word.push_back(FieldSymbol{i + 1, tuple[static_cast<size_t>(i)]});
      WickExpression part = normal_order_product(word);
      // Orient spacelike-separated contractions canonically (the symbols
      // commute there), so different tuples agree on the orientation.
      for (auto& t : part.terms) {
        for (auto& p : t.props) {
          if (p.kind != PropagatorSymbol::Kind::SegmentTwoPoint) continue;
          const bool ji_later = later.at({{p.j - 1, p.beta}, {p.i - 1, p.alpha}});
          if (ji_later && p.j < p.i) {
            std::swap(p.i, p.j);
            std::swap(p.alpha, p.beta);
          }
        }
      }
      total = total + part;
    } while (next_tuple(tuple, sizes));

    if (failing.empty()) {
      resum_segments(total, sizes);
      total.canonicalize();
      return total;
    }
    if (round >= refine_limit)
      throw RefinementLimitExceeded("recursive T-product refinement limit",
                                    failing.front());
    std::vector<std::set<Rational>> new_cuts(static_cast<size_t>(n));
    for (const auto& t : failing)
      for (int i = 0; i < n; ++i) {
        const auto& ci = chopping.cuts[static_cast<size_t>(i)];
        const int alpha = t[static_cast<size_t>(i)];
        if (alpha == static_cast<int>(ci.size())) continue;
        const Rational lo = alpha == 0 ? Rational(0) : ci[static_cast<size_t>(alpha - 1)];
        new_cuts[static_cast<size_t>(i)].insert((lo + ci[static_cast<size_t>(alpha)]) /
                                                Rational(2));
      }
    for (int i = 0; i < n; ++i) {
      auto& ci = chopping.cuts[static_cast<size_t>(i)];
      ci.insert(ci.end(), new_cuts[static_cast<size_t>(i)].begin(),
                new_cuts[static_cast<size_t>(i)].end());
      std::sort(ci.begin(), ci.end());
    }
  }
}

WickExpression t_product_recursive(const std::vector<StringGeom>& config,
                                   const ChopOptions& opts) {
  const int n = static_cast<int>(config.size());
  if (n <= 1) return t_product_with_chopping(config, Chopping{}, opts.refine_limit);
  ChopOptions o = opts;
  o.hereditary = true;
  auto [chopping, table] = chop_n(config, o);
  return t_product_with_chopping(config, std::move(chopping), o.refine_limit);
}

WickExpression t_factor_product(const WickExpression& later_part,
                                const WickExpression& earlier_part) {
  WickExpression out;
  for (const auto& ta : later_part.terms) {
    for (const auto& tb : earlier_part.terms) {
      // Cross contractions between the two normal words; the later factor is
      // the left argument and the pair is time-ordered, hence Feynman.
      const size_t na = ta.normal.size();
      const size_t nb = tb.normal.size();
      std::vector<std::pair<int, int>> cross;
      auto emit = [&]() {
        WickExpression::Term t;
        t.coef = ta.coef * tb.coef;
        t.props = ta.props;
        t.props.insert(t.props.end(), tb.props.begin(), tb.props.end());
        std::vector<char> used_a(na, 0), used_b(nb, 0);
        for (const auto& [p, q] : cross) {
          used_a[static_cast<size_t>(p)] = 1;
          used_b[static_cast<size_t>(q)] = 1;
          t.props.push_back(PropagatorSymbol::feynman(
              ta.normal[static_cast<size_t>(p)].vertex,
              tb.normal[static_cast<size_t>(q)].vertex));
        }
        for (size_t p = 0; p < na; ++p)
          if (!used_a[p]) t.normal.push_back(ta.normal[p]);
        for (size_t q = 0; q < nb; ++q)
          if (!used_b[q]) t.normal.push_back(tb.normal[q]);
        out.terms.push_back(std::move(t));
      };
      auto rec = [&](auto&& self, size_t p, std::vector<char> used_b) -> void {
        if (p == na) {
          emit();
          return;
        }
        self(self, p + 1, used_b);  // p stays external
        for (size_t q = 0; q < nb; ++q) {
          if (used_b[q]) continue;
          used_b[q] = 1;
          cross.emplace_back(static_cast<int>(p), static_cast<int>(q));
          self(self, p + 1, used_b);
          cross.pop_back();
          used_b[q] = 0;
        }
      };
      rec(rec, 0, std::vector<char>(nb, 0));
    }
  }
  out.canonicalize();
  return out;
}

bool chopping_independence_check(const std::vector<StringGeom>& config,
                                 const Chopping& a, const Chopping& b,
                                 const LatestTable* table_a,
                                 const LatestTable* table_b) {
  if (table_a) {
    const VerifyReport ra = verify_chopping(config, a, *table_a);
    if (!ra.pass)
      throw PreconditionViolated("chopping A failed certificate verification");
  }
  if (table_b) {
    const VerifyReport rb = verify_chopping(config, b, *table_b);
    if (!rb.pass)
      throw PreconditionViolated("chopping B failed certificate verification");
  }
  return t_product_with_chopping(config, a) == t_product_with_chopping(config, b);
}

}  // namespace causalchop
