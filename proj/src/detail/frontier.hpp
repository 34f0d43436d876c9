#ifndef IBNCERT_DETAIL_FRONTIER_HPP_
#define IBNCERT_DETAIL_FRONTIER_HPP_

#include <algorithm>
#include <cstddef>
#include <unordered_map>
#include <vector>

#include "ibncert/monoid.hpp"

namespace ibncert::detail {

  // Level-by-level forward search from a single start element. Levels are
  // kept sorted and expanded in order, so the parent recorded for each
  // element (the first one to reach it) does not depend on hashing.
  class Frontier {
   public:
    struct Parent {
      MonoidElement element;
      std::size_t   generator = 0;
      std::size_t   depth     = 0;
      bool          root      = true;
    };

    Frontier(MonoidElement start, RewriteSystem const& rs, SearchBounds bounds)
        : _rs(&rs), _bounds(bounds) {
      _seen.emplace(start, Parent{});
      _level.push_back(std::move(start));
    }

    [[nodiscard]] bool exhausted() const noexcept {
      return _level.empty();
    }
    [[nodiscard]] bool truncated() const noexcept {
      return _truncated;
    }
    [[nodiscard]] std::size_t depth() const noexcept {
      return _depth;
    }
    [[nodiscard]] std::size_t state_count() const noexcept {
      return _seen.size();
    }
    //! The elements discovered by the most recent expand(), sorted.
    [[nodiscard]] std::vector<MonoidElement> const& level() const noexcept {
      return _level;
    }
    [[nodiscard]] Parent const* find(MonoidElement const& x) const {
      auto it = _seen.find(x);
      return it == _seen.end() ? nullptr : &it->second;
    }
    [[nodiscard]] bool contains(MonoidElement const& x) const {
      return _seen.contains(x);
    }

    void expand() {
      std::vector<MonoidElement> next;
      bool                       full = false;
      for (auto const& x : _level) {
        for (auto& [gen, y] : successors(x, *_rs)) {
          if (_seen.contains(y)) {
            continue;
          }
          if (_depth >= _bounds.max_depth || full
              || y.total() > _bounds.max_total_coefficient) {
            _truncated = true;
            continue;
          }
          if (_seen.size() >= _bounds.max_states) {
            _truncated = true;
            full       = true;
            continue;
          }
          _seen.emplace(y, Parent{x, gen, _depth + 1, false});
          next.push_back(std::move(y));
        }
      }
      std::sort(next.begin(), next.end());
      _level = std::move(next);
      ++_depth;
    }

    //! The path from the start to `x`, which must have been seen.
    [[nodiscard]] ReductionTrace trace_to(MonoidElement const& x) const {
      std::vector<TraceStep> rev;
      MonoidElement          cur = x;
      while (true) {
        Parent const& p = _seen.at(cur);
        if (p.root) {
          break;
        }
        rev.push_back({p.generator, cur});
        cur = p.element;
      }
      return ReductionTrace{cur, {rev.rbegin(), rev.rend()}};
    }

    //! Every seen element, sorted.
    [[nodiscard]] std::vector<MonoidElement> elements() const {
      std::vector<MonoidElement> out;
      out.reserve(_seen.size());
      for (auto const& kv : _seen) {
        out.push_back(kv.first);
      }
      std::sort(out.begin(), out.end());
      return out;
    }

   private:
    RewriteSystem const* _rs;
    SearchBounds         _bounds;
    std::unordered_map<MonoidElement, Parent, MonoidElementHash> _seen;
    std::vector<MonoidElement>                                   _level;
    std::size_t                                                  _depth = 0;
    bool _truncated = false;
  };

}  // namespace ibncert::detail

#endif  // IBNCERT_DETAIL_FRONTIER_HPP_
