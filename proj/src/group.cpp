#include "orbitgames/group.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace orbitgames {

namespace {

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

TopGroup::TopGroup(int order, std::vector<std::vector<int>> mult, int identity,
                   std::vector<int> inverse, std::vector<SmallSet> filter_chain)
    : order_(order),
      mult_(std::move(mult)),
      identity_(identity),
      inv_(std::move(inverse)),
      chain_(std::move(filter_chain)) {
  check_capacity(order_, "TopGroup");
  if (order_ == 0) throw std::invalid_argument("TopGroup: a group has at least one element");
  auto in_range = [this](int v) { return v >= 0 && v < order_; };
  if (mult_.size() != static_cast<std::size_t>(order_))
    throw std::invalid_argument("TopGroup: multiplication table needs " + std::to_string(order_) + " rows");
  for (const auto& row : mult_) {
    if (row.size() != static_cast<std::size_t>(order_))
      throw std::invalid_argument("TopGroup: multiplication table row has the wrong length");
    if (!std::all_of(row.begin(), row.end(), in_range))
      throw std::invalid_argument("TopGroup: multiplication table entry out of range");
  }
  if (!in_range(identity_)) throw std::invalid_argument("TopGroup: identity out of range");
  if (inv_.size() != static_cast<std::size_t>(order_) || !std::all_of(inv_.begin(), inv_.end(), in_range))
    throw std::invalid_argument("TopGroup: inverse table malformed");
  if (chain_.empty()) throw std::invalid_argument("TopGroup: filter chain must start with the whole group");
  for (const auto& v : chain_)
    if (!v.subset_of(elements())) throw std::invalid_argument("TopGroup: chain element " + v.str() + " out of range");
}

TopGroup TopGroup::trivial() { return cyclic(1); }

TopGroup TopGroup::cyclic(int n) {
  check_capacity(n, "cyclic group");
  std::vector<std::vector<int>> mult(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
    inv[static_cast<std::size_t>(a)] = (n - a) % n;
  }
  std::vector<SmallSet> chain{SmallSet::full(n)};
  if (n > 1) chain.push_back(SmallSet::singleton(0));
  return TopGroup(n, std::move(mult), 0, std::move(inv), std::move(chain));
}

TopGroup TopGroup::klein() {
  std::vector<std::vector<int>> mult(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = a ^ b;
  return TopGroup(4, std::move(mult), 0, {0, 1, 2, 3}, {SmallSet::full(4), SmallSet{0}});
}

TopGroup TopGroup::symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::array<int, 3>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> mult(6, std::vector<int>(6));
  std::vector<int> inv(6);
  for (int a = 0; a < 6; ++a) {
    const auto& pa = perms[static_cast<std::size_t>(a)];
    std::array<int, 3> ia{};
    for (int i = 0; i < 3; ++i) ia[static_cast<std::size_t>(pa[static_cast<std::size_t>(i)])] = i;
    inv[static_cast<std::size_t>(a)] = index_of(ia);
    for (int b = 0; b < 6; ++b) {
      const auto& pb = perms[static_cast<std::size_t>(b)];
      std::array<int, 3> c{};
      for (std::size_t i = 0; i < 3; ++i) c[i] = pa[static_cast<std::size_t>(pb[i])];
      mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = index_of(c);
    }
  }
  return TopGroup(6, std::move(mult), 0, std::move(inv), {SmallSet::full(6), SmallSet{0}});
}

TopGroup TopGroup::with_chain(std::vector<SmallSet> chain) const {
  return TopGroup(order_, mult_, identity_, inv_, std::move(chain));
}

SmallSet TopGroup::left_translate(int g, SmallSet s) const {
  SmallSet out;
  s.for_each([&](int h) { out.insert(mult(g, h)); });
  return out;
}

bool TopGroup::is_subgroup(SmallSet s) const {
  if (!s.contains(identity_)) return false;
  bool closed = true;
  s.for_each([&](int a) {
    s.for_each([&](int b) { closed = closed && s.contains(mult(a, inverse(b))); });
  });
  return closed;
}

ValidationReport TopGroup::validate() const {
  ValidationReport report;
  for (int a = 0; a < order_; ++a)
    if (mult(identity_, a) != a || mult(a, identity_) != a)
      report.add("identity", "identity is not neutral for element " + std::to_string(a), {a});
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      for (int c = 0; c < order_; ++c)
        if (mult(mult(a, b), c) != mult(a, mult(b, c)))
          report.add("associativity", "(ab)c != a(bc) at " + triple(a, b, c), {a, b, c});
  for (int a = 0; a < order_; ++a)
    if (mult(a, inverse(a)) != identity_ || mult(inverse(a), a) != identity_)
      report.add("inverse", "inverse table wrong for element " + std::to_string(a), {a});
  if (chain_.front() != elements())
    report.add("filter-chain", "V_0 must be the whole group", {0});
  for (std::size_t i = 0; i < chain_.size(); ++i) {
    if (!chain_[i].contains(identity_))
      report.add("filter-chain", "V_" + std::to_string(i) + " misses the identity", {static_cast<int>(i)});
    if (i > 0 && !chain_[i].subset_of(chain_[i - 1]))
      report.add("filter-chain", "chain is not descending at V_" + std::to_string(i), {static_cast<int>(i)});
  }
  return report;
}

}  // namespace orbitgames
