#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace nonleighton {

  // Union-find over 0..n-1 where the representative of a class is always its
  // least element.  Coset enumeration relies on this: the surviving coset of a
  // coincidence is the older one.
  class MinRootDisjointSets {
   public:
    MinRootDisjointSets() = default;
    explicit MinRootDisjointSets(std::size_t n) : _parent(n) {
      std::iota(_parent.begin(), _parent.end(), std::size_t(0));
    }

    std::size_t size() const noexcept {
      return _parent.size();
    }

    std::size_t add() {
      _parent.push_back(_parent.size());
      return _parent.size() - 1;
    }

    std::size_t find(std::size_t x) {
      std::size_t root = x;
      while (_parent[root] != root) {
        root = _parent[root];
      }
      while (_parent[x] != root) {
        x = std::exchange(_parent[x], root);
      }
      return root;
    }

    bool is_root(std::size_t x) const {
      return _parent[x] == x;
    }

    // Returns the element that stopped being a root, or size() if x and y
    // were already equivalent.
    std::size_t unite(std::size_t x, std::size_t y) {
      x = find(x);
      y = find(y);
      if (x == y) {
        return size();
      }
      if (y < x) {
        std::swap(x, y);
      }
      _parent[y] = x;
      return y;
    }

   private:
    std::vector<std::size_t> _parent;
  };

}  // namespace nonleighton
