#pragma once

// Reference implementations written straight from the definitions, with no
// sharing of code paths with the library beyond the data types.

#include <algorithm>
#include <string>
#include <vector>

#include "gmss/shapes.hpp"

namespace oracle {

using gmss::Label;
using gmss::Pruned;
using gmss::Term;
using Labels = std::vector<Label>;

inline Label mss(const Labels& xs) {
  Label best = 0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i; j < xs.size(); ++j) {
      Label s = 0;
      for (std::size_t k = i; k <= j; ++k) s += xs[k];
      best = std::max(best, s);
    }
  return best;
}

inline Label max_prefix_sum(const Labels& xs) {
  Label best = 0, run = 0;
  for (Label x : xs) best = std::max(best, run += x);
  return best;
}

inline Label sum_of_prefix_products(const Labels& xs) {
  Label total = 0;
  for (std::size_t len = 0; len <= xs.size(); ++len) {
    Label prod = 1;
    for (std::size_t k = 0; k < len; ++k) prod *= xs[k];
    total += prod;
  }
  return total;
}

inline Label label_sum(const Term& t) {
  Label s = t.node().label.value_or(0);
  for (const Term& k : t.node().kids) s += label_sum(k);
  return s;
}

inline std::size_t nodes(const Term& t) {
  std::size_t n = 1;
  for (const Term& k : t.node().kids) n += nodes(k);
  return n;
}

inline void preorder_labels(const Term& t, Labels& out) {
  if (t.node().label) out.push_back(*t.node().label);
  for (const Term& k : t.node().kids) preorder_labels(k, out);
}

inline void all_subterms(const Term& t, std::vector<Term>& out) {
  out.push_back(t);
  for (const Term& k : t.node().kids) all_subterms(k, out);
}

/// Every pruning, by choosing for each node whether to cut it, as strings.
inline std::vector<std::string> prunings(const Term& t) {
  const auto& n = t.node();
  std::vector<std::vector<std::string>> kids;
  for (const Term& k : n.kids) kids.push_back(prunings(k));
  std::vector<std::string> heads{"(" + std::string(gmss::info(n.tag).keyword)};
  if (n.label) heads[0] += " " + std::to_string(*n.label);
  for (const auto& options : kids) {
    std::vector<std::string> next;
    for (const auto& h : heads)
      for (const auto& o : options) next.push_back(h + " " + o);
    heads = std::move(next);
  }
  std::vector<std::string> out{"E"};
  for (auto& h : heads) {
    // A childless constructor without a label prints as a bare word.
    if (n.kids.empty() && !n.label) out.push_back(std::string(gmss::info(n.tag).keyword));
    else out.push_back(h + ")");
  }
  return out;
}

/// Max-plus value of a pruning: Empty is b, a node adds b to its label and
/// its children's values.
inline Label pruned_sum(const Pruned& p, Label b) {
  if (p.is_empty()) return b;
  Label s = p.node().label.value_or(0) + b;
  for (const Pruned& k : p.node().kids) s += pruned_sum(k, b);
  return s;
}

}  // namespace oracle
