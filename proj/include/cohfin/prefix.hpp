/*
 *   Copyright 2026 The cohfin Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * Infinite bit sequences as prefix sets over the web of finite bit strings.
 *
 * An infinite sequence x determines x↓, the set of its finite prefixes
 * (the empty string included). Two different sequences share only finitely
 * many prefixes, while x↓ meets itself infinitely. This is what separates
 * X↓^⊥ from X'↓^⊥ whenever the sets of sequences X and X' differ: a
 * sequence x in X but not in X' gives a set x↓ that meets every member of
 * X'↓ finitely but meets x↓ ∈ X↓ infinitely.
 *
 * Only eventually periodic sequences, prefix · period^ω, are representable;
 * they have decidable equality through a canonical form.
 */

#pragma once

#include <algorithm>
#include <compare>
#include <iterator>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cohfin/errors.hpp"
#include "cohfin/law_report.hpp"

namespace cohfin {

/// prefix · period · period · ... in canonical form: the period is
/// primitive and the prefix is as short as possible.
class EventuallyPeriodicWord {
 public:
  /// Canonical form of prefix · period^ω. Both strings are over {'0','1'}.
  static EventuallyPeriodicWord canonicalize(std::string prefix, std::string period) {
    auto check = [](const std::string& s) {
      if (!std::all_of(s.begin(), s.end(), [](char ch) { return ch == '0' || ch == '1'; })) {
        throw ContractError("bit strings may only contain '0' and '1': \"" + s + "\"");
      }
    };
    check(prefix);
    check(period);
    if (period.empty()) throw ContractError("the period of a word must be nonempty");
    period = primitive_root(period);
    while (!prefix.empty() && prefix.back() == period.back()) {
      std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
      prefix.pop_back();
    }
    return EventuallyPeriodicWord(std::move(prefix), std::move(period));
  }

  const std::string& prefix() const noexcept { return prefix_; }
  const std::string& period() const noexcept { return period_; }

  char bit(std::size_t i) const {
    if (i < prefix_.size()) return prefix_[i];
    return period_[(i - prefix_.size()) % period_.size()];
  }

  /// The first n bits.
  std::string take(std::size_t n) const {
    std::string out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(bit(i));
    return out;
  }

  /// "prefix(period)".
  std::string to_string() const { return prefix_ + "(" + period_ + ")"; }

  friend bool operator==(const EventuallyPeriodicWord&, const EventuallyPeriodicWord&) = default;
  friend auto operator<=>(const EventuallyPeriodicWord&, const EventuallyPeriodicWord&) = default;

 private:
  EventuallyPeriodicWord(std::string prefix, std::string period)
      : prefix_(std::move(prefix)), period_(std::move(period)) {}

  static std::string primitive_root(const std::string& w) {
    const std::size_t n = w.size();
    for (std::size_t len = 1; len < n; ++len) {
      if (n % len != 0) continue;
      bool repeats = true;
      for (std::size_t i = len; i < n && repeats; ++i) repeats = w[i] == w[i - len];
      if (repeats) return w.substr(0, len);
    }
    return w;
  }

  std::string prefix_;
  std::string period_;
};

inline EventuallyPeriodicWord canonicalize(std::string prefix, std::string period) {
  return EventuallyPeriodicWord::canonicalize(std::move(prefix), std::move(period));
}

/// Parses "prefix(period)", e.g. "0(1)" or "(01)".
inline EventuallyPeriodicWord parse_word(const std::string& text) {
  const auto open = text.find('(');
  if (open == std::string::npos || text.empty() || text.back() != ')') {
    throw ContractError("word must look like prefix(period): \"" + text + "\"");
  }
  return canonicalize(text.substr(0, open), text.substr(open + 1, text.size() - open - 2));
}

/// Bits after which two words that still agree must be equal.
inline std::size_t agreement_horizon(const EventuallyPeriodicWord& x,
                                     const EventuallyPeriodicWord& y) {
  return x.prefix().size() + y.prefix().size() + std::lcm(x.period().size(), y.period().size());
}

/// Length of the longest common prefix; std::nullopt when x = y (the
/// common prefix is infinite).
inline std::optional<std::size_t> common_prefix_len(const EventuallyPeriodicWord& x,
                                                    const EventuallyPeriodicWord& y) {
  const std::size_t horizon = agreement_horizon(x, y);
  for (std::size_t i = 0; i < horizon; ++i) {
    if (x.bit(i) != y.bit(i)) return i;
  }
  return std::nullopt;
}

/// #(x↓ ∩ y↓): common prefix length plus one for the empty string;
/// std::nullopt (infinite) iff x = y.
inline std::optional<std::size_t> intersection_size(const EventuallyPeriodicWord& x,
                                                    const EventuallyPeriodicWord& y) {
  if (auto n = common_prefix_len(x, y)) return *n + 1;
  return std::nullopt;
}

/// The prefixes of `word` of length 0..depth.
class PrefixSet {
 public:
  PrefixSet(EventuallyPeriodicWord word, std::size_t depth)
      : word_(std::move(word)), depth_(depth) {}

  const EventuallyPeriodicWord& word() const noexcept { return word_; }
  std::size_t depth() const noexcept { return depth_; }
  std::size_t size() const noexcept { return depth_ + 1; }

  std::vector<std::string> elements() const {
    std::vector<std::string> out;
    out.reserve(depth_ + 1);
    for (std::size_t i = 0; i <= depth_; ++i) out.push_back(word_.take(i));
    return out;
  }

 private:
  EventuallyPeriodicWord word_;
  std::size_t depth_;
};

inline PrefixSet down_set(const EventuallyPeriodicWord& x, std::size_t depth) {
  return PrefixSet(x, depth);
}

/// Evidence that X↓^⊥ and X'↓^⊥ differ.
struct Separation {
  EventuallyPeriodicWord witness;
  /// "X" if the witness belongs to X (and not X'), "X'" otherwise.
  std::string witness_side;
  /// Each word of the other side with its finite intersection size.
  std::vector<std::pair<EventuallyPeriodicWord, std::size_t>> evidence;
  /// Always true for a valid separation: x↓ ∩ x↓ is infinite.
  bool self_intersection_infinite = false;
};

namespace detail {

inline std::vector<EventuallyPeriodicWord> sorted_unique(std::vector<EventuallyPeriodicWord> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace detail

/// Picks a word x in the symmetric difference of X and X' (first of X \ X'
/// in canonical order, else first of X' \ X) and records why x↓ lies in
/// the orthogonal of the other side's prefix sets but not in its own side's.
///
/// Throws ContractError when X = X'.
inline Separation separation_witness(std::vector<EventuallyPeriodicWord> xs,
                                     std::vector<EventuallyPeriodicWord> ys) {
  xs = detail::sorted_unique(std::move(xs));
  ys = detail::sorted_unique(std::move(ys));
  std::vector<EventuallyPeriodicWord> only_x;
  std::vector<EventuallyPeriodicWord> only_y;
  std::set_difference(xs.begin(), xs.end(), ys.begin(), ys.end(), std::back_inserter(only_x));
  std::set_difference(ys.begin(), ys.end(), xs.begin(), xs.end(), std::back_inserter(only_y));
  if (only_x.empty() && only_y.empty()) {
    throw ContractError("no witness exists: the two word sets are equal");
  }
  const bool from_x = !only_x.empty();
  Separation out{from_x ? only_x.front() : only_y.front(), from_x ? "X" : "X'", {}, false};
  for (const auto& y : from_x ? ys : xs) {
    auto n = intersection_size(out.witness, y);
    if (!n) throw std::logic_error("distinct canonical words with infinite common prefix");
    out.evidence.emplace_back(y, *n);
  }
  out.self_intersection_infinite = !intersection_size(out.witness, out.witness).has_value();
  return out;
}

/// Depth at which brute-force prefix intersections of the given words are
/// conclusive: longest prefix plus twice the lcm of the period lengths.
inline std::size_t verification_depth(const std::vector<EventuallyPeriodicWord>& words) {
  std::size_t longest = 0;
  std::size_t period_lcm = 1;
  for (const auto& w : words) {
    longest = std::max(longest, w.prefix().size());
    period_lcm = std::lcm(period_lcm, w.period().size());
  }
  return longest + 2 * period_lcm;
}

inline Json word_json(const EventuallyPeriodicWord& w) {
  return Json{{"prefix", w.prefix()}, {"period", w.period()}};
}

inline EventuallyPeriodicWord word_from_json(const Json& j) {
  return canonicalize(j.at("prefix").get<std::string>(), j.at("period").get<std::string>());
}

inline LawReport to_law_report(const Separation& s) {
  LawReport r;
  r.law = "prefix_set_separation";
  r.params = {{"witness_side", s.witness_side}};
  Json evidence = Json::array();
  for (const auto& [y, n] : s.evidence) {
    evidence.push_back({{"word", word_json(y)}, {"intersection_size", n}});
  }
  r.pass = s.self_intersection_infinite;
  r.witness = {{"word", word_json(s.witness)},
               {"evidence", evidence},
               {"self_intersection", "infinite"},
               {"conclusion", "the prefix set of the witness is orthogonal to the other side's "
                              "prefix sets but not to its own side's"}};
  return r;
}

}  // namespace cohfin
