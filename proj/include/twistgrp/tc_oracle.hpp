#pragma once

// Brute-force twisted conjugacy over any group given by callbacks.
//
// Elements x, x' are φ-conjugate when x' = g·x·φ(g⁻¹) for some g. The oracle
// only ever searches a finite list of conjugators, so a negative answer means
// "no link found within the list", never "not conjugate".

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "twistgrp/errors.hpp"

namespace twistgrp::tc {

template <class E>
struct GroupInterface {
  std::function<E(const E&, const E&)> mul;
  std::function<E(const E&)> inv;
  E identity{};
  std::function<E(const E&)> automorphism;

  /// Spot-checks the group axioms and the homomorphism property of the
  /// automorphism on caller-provided samples. Throws PreconditionError.
  void validate(std::span<const E> samples) const {
    if (automorphism(identity) != identity) throw PreconditionError("automorphism does not fix the identity");
    for (const E& x : samples) {
      if (mul(identity, x) != x || mul(x, identity) != x) throw PreconditionError("identity is not two-sided");
      if (mul(x, inv(x)) != identity || mul(inv(x), x) != identity) throw PreconditionError("inverse law fails");
    }
    for (const E& x : samples)
      for (const E& y : samples) {
        if (automorphism(mul(x, y)) != mul(automorphism(x), automorphism(y)))
          throw PreconditionError("automorphism is not a homomorphism on the samples");
        for (const E& z : samples)
          if (mul(mul(x, y), z) != mul(x, mul(y, z))) throw PreconditionError("multiplication is not associative");
      }
  }
};

/// g·h·φ(g⁻¹).
template <class E>
E twisted_conjugate(const GroupInterface<E>& G, const E& g, const E& h) {
  return G.mul(G.mul(g, h), G.automorphism(G.inv(g)));
}

/// One-sided: true if some conjugator in the list carries h1 to h2.
template <class E>
bool are_twisted_conjugate(const GroupInterface<E>& G, const E& h1, const E& h2, std::span<const E> conjugators) {
  if (h1 == h2) return true;
  return std::any_of(conjugators.begin(), conjugators.end(),
                     [&](const E& g) { return twisted_conjugate(G, g, h1) == h2; });
}

/// Disjoint-set forest with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  std::size_t size() const noexcept { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

/// Partition of a finite ball into blocks of elements linked by twisted
/// conjugation. Blocks are listed in order of their smallest member index and
/// members within a block are increasing, so the result does not depend on
/// the order in which links were discovered.
template <class E>
struct ClassPartition {
  std::vector<E> elements;
  std::vector<std::size_t> block_of;             // element index -> block index
  std::vector<std::vector<std::size_t>> blocks;  // block index -> member indices

  std::size_t block_count() const noexcept { return blocks.size(); }
  const E& representative(std::size_t block) const { return elements[blocks[block].front()]; }
};

template <class E>
ClassPartition<E> make_partition(std::vector<E> elements, UnionFind& uf) {
  ClassPartition<E> out;
  out.block_of.assign(elements.size(), 0);
  std::vector<std::size_t> root_block(elements.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    std::size_t r = uf.find(i);
    if (root_block[r] == static_cast<std::size_t>(-1)) {
      root_block[r] = out.blocks.size();
      out.blocks.emplace_back();
    }
    out.block_of[i] = root_block[r];
    out.blocks[root_block[r]].push_back(i);
  }
  out.elements = std::move(elements);
  return out;
}

/// Links h ~ g·h·φ(g⁻¹) for every h in the ball and every listed conjugator g
/// whose image stays inside the ball, then returns the connected components.
///
/// The block count is an upper bound on the number of classes meeting the
/// ball: links that need a conjugator outside the list, or an intermediate
/// element outside the ball, are not seen.
template <class E, class Hash = std::hash<E>>
ClassPartition<E> partition_ball(const GroupInterface<E>& G, std::vector<E> ball, std::span<const E> conjugators) {
  std::unordered_map<E, std::size_t, Hash> index;
  index.reserve(ball.size() * 2);
  for (std::size_t i = 0; i < ball.size(); ++i)
    if (!index.emplace(ball[i], i).second) throw PreconditionError("ball contains duplicate elements");

  UnionFind uf(ball.size());
  for (const E& g : conjugators) {
    const E tail = G.automorphism(G.inv(g));
    for (std::size_t i = 0; i < ball.size(); ++i) {
      auto it = index.find(G.mul(G.mul(g, ball[i]), tail));
      if (it != index.end()) uf.unite(i, it->second);
    }
  }
  return make_partition(std::move(ball), uf);
}

}  // namespace twistgrp::tc
