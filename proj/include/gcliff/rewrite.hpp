#pragma once

// Degree-bounded completion of two-generator presentations (Bergman's diamond
// lemma / noncommutative Buchberger), normal forms and graded dimensions.

#include "gcliff/freealg.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace gcliff {

struct OrderFailure : AlgebraError {
  using AlgebraError::AlgebraError;
};
struct BudgetExceeded : AlgebraError {
  using AlgebraError::AlgebraError;
};
struct DegreeOutOfRange : AlgebraError {
  using AlgebraError::AlgebraError;
};

/// lead -> tail, every word of tail strictly below lead.
template <Field K>
struct RewriteRule {
  Word lead;
  NcPoly<K> tail;
};

struct CompletionOptions {
  WordOrder order{LetterOrder::x_greater_y};
  unsigned degree_bound = 13;
  std::size_t max_rules = 5000;
};

struct CompletionStats {
  std::size_t overlaps_processed = 0;
  std::size_t overlaps_skipped = 0;  ///< above the degree bound
  std::size_t rules_added = 0;
  std::size_t rules_retired = 0;
};

template <Field K>
class RewriteSystem {
 public:
  using value_type = typename K::value_type;

  RewriteSystem(K field, WordOrder order, unsigned degree_bound)
      : field_(std::move(field)), order_(order), degree_bound_(degree_bound), confluent_to_(degree_bound) {}

  const K& field() const { return field_; }
  const WordOrder& order() const { return order_; }
  const std::vector<RewriteRule<K>>& rules() const { return rules_; }
  unsigned degree_bound() const { return degree_bound_; }

  /// Largest degree up to which every overlap ambiguity is known to resolve.
  unsigned confluent_to() const { return confluent_to_; }

  /// True when no overlap was skipped: the rules form a full Groebner basis
  /// and normal forms are valid in every degree.
  bool is_complete() const { return complete_; }

  /// 1 lies in the ideal.
  bool is_trivial() const { return trivial_; }

  const CompletionStats& stats() const { return stats_; }

  /// Leftmost occurrence of a rule lead in w: (position, rule index).
  std::optional<std::pair<unsigned, std::size_t>> find_lead(Word w) const {
    for (unsigned i = 0; i < w.length(); ++i)
      for (unsigned len : lead_lengths_) {
        if (i + len > w.length()) break;
        auto it = index_.find(w.sub(i, len));
        if (it != index_.end()) return std::pair{i, it->second};
      }
    if (trivial_) return std::pair{0u, index_.at(Word())};
    return std::nullopt;
  }

  bool is_normal(Word w) const { return !find_lead(w).has_value(); }

  /// Whether some rule lead is a suffix of w.
  bool has_lead_suffix(Word w) const {
    for (unsigned len : lead_lengths_) {
      if (len > w.length()) break;
      if (index_.contains(w.suffix(len))) return true;
    }
    return false;
  }

  /// One rule per line, "lead -> tail".
  std::string dump() const {
    std::ostringstream out;
    for (const auto& r : rules_) out << r.lead.str() << " -> " << r.tail.str() << "\n";
    return out.str();
  }

 private:
  template <Field F>
  friend class Completion;

  void rebuild_index() {
    index_.clear();
    std::set<unsigned> lengths;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      index_.emplace(rules_[i].lead, i);
      lengths.insert(rules_[i].lead.length());
    }
    lead_lengths_.assign(lengths.begin(), lengths.end());
  }

  K field_;
  WordOrder order_;
  unsigned degree_bound_;
  unsigned confluent_to_;
  bool complete_ = false;
  bool trivial_ = false;
  std::vector<RewriteRule<K>> rules_;
  std::unordered_map<Word, std::size_t, WordHash> index_;
  std::vector<unsigned> lead_lengths_;
  CompletionStats stats_;
};

/// Memoized reduction of words to normal form against a fixed system. Not
/// thread-safe; use one per thread.
template <Field K>
class NormalFormCache {
 public:
  explicit NormalFormCache(const RewriteSystem<K>& system) : system_(system) {}

  const NcPoly<K>& of_word(Word w) {
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    const K& k = system_.field();
    NcPoly<K> out(k);
    if (auto hit = system_.find_lead(w)) {
      auto [pos, idx] = *hit;
      const auto& rule = system_.rules()[idx];
      Word u = w.prefix(pos);
      Word v = w.suffix(w.length() - pos - rule.lead.length());
      for (const auto& [t, c] : rule.tail.terms()) {
        const NcPoly<K>& sub = of_word(u * t * v);
        for (const auto& [s, d] : sub.terms()) out.add_term(s, k.mul(c, d));
      }
    } else {
      out.add_term(w, k.one());
    }
    return cache_.emplace(w, std::move(out)).first->second;
  }

  NcPoly<K> operator()(const NcPoly<K>& p) {
    check_range(p);
    const K& k = system_.field();
    NcPoly<K> out(k);
    for (const auto& [w, c] : p.terms())
      for (const auto& [s, d] : of_word(w).terms()) out.add_term(s, k.mul(c, d));
    return out;
  }

  void check_range(const NcPoly<K>& p) const {
    if (!system_.is_complete() && p.degree() > static_cast<int>(system_.confluent_to()))
      throw DegreeOutOfRange("degree " + std::to_string(p.degree()) + " exceeds confluence bound " +
                             std::to_string(system_.confluent_to()));
  }

  std::size_t size() const { return cache_.size(); }

 private:
  const RewriteSystem<K>& system_;
  std::unordered_map<Word, NcPoly<K>, WordHash> cache_;
};

template <Field K>
NcPoly<K> normal_form(const RewriteSystem<K>& system, const NcPoly<K>& p) {
  NormalFormCache<K> cache(system);
  return cache(p);
}

struct AmbiguityReport {
  std::size_t overlaps_checked = 0;
  std::size_t inclusions_checked = 0;
  std::vector<Word> unresolved;  ///< ambiguous words whose two reductions differ
};

/// Diamond-lemma audit: every overlap ambiguity lead_i = u s, lead_j = s v and
/// every inclusion lead_i = u lead_j v of total degree <= max_degree is
/// reduced both ways and compared.
template <Field K>
AmbiguityReport audit_ambiguities(const RewriteSystem<K>& system, unsigned max_degree) {
  AmbiguityReport out;
  if (system.is_trivial()) return out;
  NormalFormCache<K> nf(system);
  const K& k = system.field();
  const auto& rules = system.rules();
  auto word = [&](Word w) { return NcPoly<K>::word(k, w); };
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Word a = rules[i].lead;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word b = rules[j].lead;
      for (unsigned s = 1; s < a.length() && s < b.length(); ++s) {
        if (a.length() + b.length() - s > max_degree) continue;
        if (!(a.suffix(s) == b.prefix(s))) continue;
        ++out.overlaps_checked;
        Word u = a.prefix(a.length() - s), v = b.suffix(b.length() - s);
        if (!(nf(rules[i].tail * word(v)) - nf(word(u) * rules[j].tail)).is_zero()) out.unresolved.push_back(a * v);
      }
      if (i == j || b.length() > a.length() || a.length() > max_degree) continue;
      int pos = a.find(b);
      if (pos < 0) continue;
      ++out.inclusions_checked;
      auto p = static_cast<unsigned>(pos);
      Word u = a.prefix(p), v = a.suffix(a.length() - p - b.length());
      if (!(nf(rules[i].tail) - nf(word(u) * rules[j].tail * word(v))).is_zero()) out.unresolved.push_back(a);
    }
  }
  return out;
}

/// Buchberger-style completion; overlaps are processed in ascending total
/// degree, ties in creation order.
template <Field K>
class Completion {
 public:
  using value_type = typename K::value_type;

  Completion(const K& field, const CompletionOptions& options)
      : options_(options), system_(field, options.order, options.degree_bound) {}

  RewriteSystem<K> run(const std::vector<NcPoly<K>>& relations) {
    for (const auto& r : relations) {
      if (!(r.field() == system_.field_)) throw FieldMismatch("relation over a different field");
      pending_.push_back(r);
    }
    drain_pending();
    while (!system_.trivial_ && !queue_.empty()) {
      auto [degree, seq, a, b, overlap] = *queue_.begin();
      queue_.erase(queue_.begin());
      if (!alive_[a] || !alive_[b]) continue;
      ++system_.stats_.overlaps_processed;
      auto s = s_polynomial(a, b, overlap);
      auto r = reduce(s);
      if (!r.is_zero()) pending_.push_back(std::move(r));
      drain_pending();
    }
    finish();
    return std::move(system_);
  }

 private:
  using Pair = std::tuple<unsigned, std::size_t, std::size_t, std::size_t, unsigned>;

  struct Live {
    Word lead;
    NcPoly<K> tail;
  };

  void drain_pending() {
    while (!pending_.empty() && !system_.trivial_) {
      auto p = reduce(pending_.back());
      pending_.pop_back();
      if (!p.is_zero()) add_rule(std::move(p));
    }
  }

  void add_rule(NcPoly<K> p) {
    const K& k = system_.field_;
    auto [lead, lc] = p.leading(options_.order);
    auto inv = k.inv(lc);
    NcPoly<K> tail(k);
    for (const auto& [w, c] : p.terms())
      if (!(w == lead)) tail.add_term(w, k.neg(k.mul(c, inv)));
    for (const auto& [w, c] : tail.terms())
      if (!options_.order.less(w, lead)) throw OrderFailure("tail word " + w.str() + " not below lead " + lead.str());

    if (live_count_ + 1 > options_.max_rules)
      throw BudgetExceeded("rule budget of " + std::to_string(options_.max_rules) + " exhausted");

    // Retire rules whose lead contains the new lead; their relations are
    // re-reduced and re-added.
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      if (!alive_[i] || rules_[i].lead.find(lead) < 0) continue;
      alive_[i] = false;
      --live_count_;
      ++system_.stats_.rules_retired;
      index_.erase(rules_[i].lead);
      NcPoly<K> rel = NcPoly<K>::word(k, rules_[i].lead) - rules_[i].tail;
      pending_.push_back(std::move(rel));
    }

    std::size_t id = rules_.size();
    rules_.push_back(Live{lead, std::move(tail)});
    alive_.push_back(true);
    ++live_count_;
    ++system_.stats_.rules_added;
    index_.emplace(lead, id);
    lengths_.insert(lead.length());

    if (lead.empty()) {
      system_.trivial_ = true;
      return;
    }
    for (std::size_t j = 0; j < rules_.size(); ++j) {
      if (!alive_[j]) continue;
      enqueue_overlaps(id, j);
      if (j != id) enqueue_overlaps(j, id);
    }
  }

  // Overlaps where a proper suffix of lead(a) equals a proper prefix of lead(b).
  void enqueue_overlaps(std::size_t a, std::size_t b) {
    Word la = rules_[a].lead, lb = rules_[b].lead;
    unsigned top = std::min(la.length(), lb.length());
    for (unsigned len = 1; len < top; ++len) {
      if (!(la.suffix(len) == lb.prefix(len))) continue;
      unsigned degree = la.length() + lb.length() - len;
      if (degree > options_.degree_bound) {
        ++system_.stats_.overlaps_skipped;
        continue;
      }
      queue_.emplace(degree, seq_++, a, b, len);
    }
  }

  NcPoly<K> s_polynomial(std::size_t a, std::size_t b, unsigned len) const {
    const auto& ra = rules_[a];
    const auto& rb = rules_[b];
    Word v = rb.lead.suffix(rb.lead.length() - len);
    Word u = ra.lead.prefix(ra.lead.length() - len);
    return ra.tail.sandwich(Word(), v) - rb.tail.sandwich(u, Word());
  }

  std::optional<std::pair<unsigned, std::size_t>> find_lead(Word w) const {
    for (unsigned i = 0; i < w.length(); ++i)
      for (unsigned len : lengths_) {
        if (i + len > w.length()) break;
        auto it = index_.find(w.sub(i, len));
        if (it != index_.end()) return std::pair{i, it->second};
      }
    if (auto it = index_.find(Word()); it != index_.end()) return std::pair{0u, it->second};
    return std::nullopt;
  }

  NcPoly<K> reduce(const NcPoly<K>& p) const {
    const K& k = system_.field_;
    std::map<Word, value_type, WordOrder> work(options_.order);
    for (const auto& [w, c] : p.terms()) work.emplace(w, c);
    NcPoly<K> out(k);
    while (!work.empty()) {
      auto node = work.extract(std::prev(work.end()));
      Word w = node.key();
      const value_type& c = node.mapped();
      auto hit = find_lead(w);
      if (!hit) {
        out.add_term(w, c);
        continue;
      }
      auto [pos, idx] = *hit;
      const auto& rule = rules_[idx];
      Word u = w.prefix(pos);
      Word v = w.suffix(w.length() - pos - rule.lead.length());
      for (const auto& [t, ct] : rule.tail.terms()) {
        auto val = k.mul(c, ct);
        auto [it, inserted] = work.try_emplace(u * t * v, val);
        if (!inserted) {
          it->second = k.add(it->second, val);
          if (k.is_zero(it->second)) work.erase(it);
        }
      }
    }
    return out;
  }

  void finish() {
    auto& sys = system_;
    if (sys.trivial_) {
      // Only the unit rule survives: every word reduces to zero.
      for (std::size_t i = 0; i < rules_.size(); ++i)
        if (alive_[i] && rules_[i].lead.empty()) sys.rules_.push_back({Word(), NcPoly<K>(sys.field_)});
      sys.complete_ = true;
      sys.confluent_to_ = Word::max_length;
      sys.rebuild_index();
      return;
    }
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < rules_.size(); ++i)
      if (alive_[i]) live.push_back(i);
    std::sort(live.begin(), live.end(),
              [&](std::size_t a, std::size_t b) { return options_.order.less(rules_[a].lead, rules_[b].lead); });
    for (auto i : live) sys.rules_.push_back({rules_[i].lead, reduce(rules_[i].tail)});
    sys.rebuild_index();
    sys.complete_ = sys.stats_.overlaps_skipped == 0;
    sys.confluent_to_ = sys.complete_ ? Word::max_length : options_.degree_bound;
  }

  CompletionOptions options_;
  RewriteSystem<K> system_;
  std::vector<Live> rules_;
  std::vector<bool> alive_;
  std::size_t live_count_ = 0;
  std::unordered_map<Word, std::size_t, WordHash> index_;
  std::set<unsigned> lengths_;
  std::set<Pair> queue_;
  std::size_t seq_ = 0;
  std::vector<NcPoly<K>> pending_;
};

template <Field K>
RewriteSystem<K> complete(const K& field, const std::vector<NcPoly<K>>& relations,
                          const CompletionOptions& options = {}) {
  for (const auto& r : relations) {
    if (r.is_zero()) throw AlgebraError("zero relation");
    if (r.degree() > static_cast<int>(options.degree_bound))
      throw DegreeOutOfRange("relation degree exceeds the degree bound");
  }
  return Completion<K>(field, options).run(relations);
}

/// Normal words of each degree 0..max_degree, each list ascending in the
/// system's order.
template <Field K>
std::vector<std::vector<Word>> normal_words_by_degree(const RewriteSystem<K>& system, unsigned max_degree) {
  std::vector<std::vector<Word>> out(max_degree + 1);
  if (system.is_trivial()) return out;
  out[0].push_back(Word());
  for (unsigned d = 1; d <= max_degree; ++d) {
    for (Word u : out[d - 1])
      for (Word a : {Word::x(), Word::y()}) {
        Word w = u * a;
        if (!system.has_lead_suffix(w)) out[d].push_back(w);
      }
    std::sort(out[d].begin(), out[d].end(), system.order());
  }
  return out;
}

template <Field K>
std::vector<Word> basis_words(const RewriteSystem<K>& system, unsigned n) {
  if (!system.is_complete() && n > system.confluent_to())
    throw DegreeOutOfRange("degree " + std::to_string(n) + " exceeds confluence bound");
  return normal_words_by_degree(system, n)[n];
}

template <Field K>
std::size_t graded_dimension(const RewriteSystem<K>& system, unsigned n) {
  return basis_words(system, n).size();
}

/// Number of (i,j,k,l,m) in N^5 with i + 3j + 2k + 3l + m = n: the degree-n
/// coefficient of 1/((1-t)^2 (1-t^2) (1-t^3)^2), counted by enumeration.
inline std::size_t hilbert_oracle(unsigned n) {
  std::size_t count = 0;
  for (unsigned j = 0; 3 * j <= n; ++j)
    for (unsigned l = 0; 3 * (j + l) <= n; ++l)
      for (unsigned k = 0; 3 * (j + l) + 2 * k <= n; ++k)
        for (unsigned i = 0; 3 * (j + l) + 2 * k + i <= n; ++i) ++count;  // m is determined
  return count;
}

/// The words y^i (xy^2)^j (xy)^k (x^2y)^l x^m of degree n, sorted in storage order.
inline std::vector<Word> monomial_basis_words(unsigned n) {
  std::vector<Word> out;
  auto rep = [](Word w, unsigned e) {
    Word r;
    for (unsigned t = 0; t < e; ++t) r = r * w;
    return r;
  };
  const Word y = Word::y(), xyy = Word::parse("xyy"), xy = Word::parse("xy"), xxy = Word::parse("xxy"),
             x = Word::x();
  for (unsigned j = 0; 3 * j <= n; ++j)
    for (unsigned l = 0; 3 * (j + l) <= n; ++l)
      for (unsigned k = 0; 3 * (j + l) + 2 * k <= n; ++k)
        for (unsigned i = 0; 3 * (j + l) + 2 * k + i <= n; ++i) {
          unsigned m = n - (3 * (j + l) + 2 * k + i);
          out.push_back(rep(y, i) * rep(xyy, j) * rep(xy, k) * rep(xxy, l) * rep(x, m));
        }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gcliff
