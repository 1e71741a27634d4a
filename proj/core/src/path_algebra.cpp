// Copyright 2026 The loopnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "loopnet/path_algebra.hpp"

#include <cstdlib>
#include <numeric>
#include <optional>
#include <sstream>

namespace loopnet {
namespace {

int mod(long long x, int n) {
  const long long r = x % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

void check_alignment(const PathRep& rep, const CirculantGraph& g) {
  if (rep.lambdas.size() + 1 != g.generators().size()) {
    std::ostringstream os;
    os << "representation has " << rep.lambdas.size()
       << " chord counts but " << g.name() << " has "
       << g.generators().size() - 1 << " chords";
    throw InvalidParameter(os.str());
  }
}

// Depth-first enumeration of all representations of a fixed length in
// tie-break order. Magnitudes are fixed position by position (smallest
// first); the last position takes whatever budget is left.
class RepSearch {
 public:
  RepSearch(const CirculantGraph& g, Vertex target)
      : n_(g.ring_size()), target_(target),
        steps_(g.generators().begin(), g.generators().end()),
        mags_(steps_.size(), 0) {}

  std::optional<PathRep> find(int length) {
    return assign(0, length);
  }

 private:
  std::optional<PathRep> assign(std::size_t pos, int budget) {
    if (pos + 1 == mags_.size()) {
      mags_[pos] = budget;
      return try_signs();
    }
    for (int mag = 0; mag <= budget; ++mag) {
      mags_[pos] = mag;
      if (auto hit = assign(pos + 1, budget - mag)) return hit;
    }
    return std::nullopt;
  }

  std::optional<PathRep> try_signs() {
    std::vector<std::size_t> nonzero;
    for (std::size_t p = 0; p < mags_.size(); ++p) {
      if (mags_[p] != 0) nonzero.push_back(p);
    }
    const std::size_t k = nonzero.size();
    // Bit (k-1-idx) is the sign of nonzero[idx]; counting the mask up
    // walks sign tuples lexicographically with + (bit clear) first.
    for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
      long long sum = 0;
      for (std::size_t idx = 0; idx < k; ++idx) {
        const std::size_t p = nonzero[idx];
        const bool negative = (mask >> (k - 1 - idx)) & 1UL;
        const long long term =
            static_cast<long long>(mags_[p]) * steps_[p];
        sum += negative ? -term : term;
      }
      if (mod(sum, n_) == target_) {
        PathRep rep;
        rep.lambdas.resize(mags_.size() - 1);
        for (std::size_t idx = 0; idx < k; ++idx) {
          const std::size_t p = nonzero[idx];
          const bool negative = (mask >> (k - 1 - idx)) & 1UL;
          const int value = negative ? -mags_[p] : mags_[p];
          if (p == 0) {
            rep.alpha = value;
          } else {
            rep.lambdas[p - 1] = value;
          }
        }
        return rep;
      }
    }
    return std::nullopt;
  }

  int n_;
  Vertex target_;
  std::vector<int> steps_;
  std::vector<int> mags_;
};

}  // namespace

int PathRep::outer_length() const { return std::abs(alpha); }

int PathRep::inner_length() const {
  int total = 0;
  for (int l : lambdas) total += std::abs(l);
  return total;
}

void require_unit_generator(const CirculantGraph& g) {
  if (!g.has_unit_generator()) {
    throw InvalidParameter(g.name() +
                           " has no generator 1; path representations "
                           "need the outer ring");
  }
}

std::vector<Vertex> replay(const Walk& w, const CirculantGraph& g) {
  const int n = g.ring_size();
  if (w.origin < 0 || w.origin >= n) {
    throw InvalidParameter("walk origin out of range");
  }
  std::vector<Vertex> out{w.origin};
  out.reserve(w.steps.size() + 1);
  Vertex at = w.origin;
  for (const Step& s : w.steps) {
    if (!g.generators().contains(s.generator)) {
      throw InvalidParameter("step " + std::to_string(s.generator) +
                             " is not a generator of " + g.name());
    }
    if (s.direction != 1 && s.direction != -1) {
      throw InvalidParameter("step direction must be +1 or -1");
    }
    at = mod(static_cast<long long>(at) + s.direction * s.generator, n);
    out.push_back(at);
  }
  return out;
}

PathRep reduce_walk(const Walk& w, const CirculantGraph& g) {
  require_unit_generator(g);
  replay(w, g);  // validation
  const auto& gens = g.generators();
  PathRep rep;
  rep.lambdas.assign(gens.size() - 1, 0);
  for (const Step& s : w.steps) {
    if (s.generator == 1) {
      rep.alpha += s.direction;
      continue;
    }
    for (std::size_t k = 1; k < gens.size(); ++k) {
      if (gens[k] == s.generator) {
        rep.lambdas[k - 1] += s.direction;
        break;
      }
    }
  }
  return rep;
}

Vertex endpoint(const PathRep& rep, const CirculantGraph& g, Vertex origin) {
  check_alignment(rep, g);
  const auto& gens = g.generators();
  long long sum = static_cast<long long>(origin) + rep.alpha;
  for (std::size_t k = 1; k < gens.size(); ++k) {
    sum += static_cast<long long>(rep.lambdas[k - 1]) * gens[k];
  }
  return mod(sum, g.ring_size());
}

PathRep shortest_rep(const CirculantGraph& g, Vertex target) {
  require_unit_generator(g);
  if (target < 0 || target >= g.ring_size()) {
    throw std::out_of_range("target out of range for " + g.name());
  }
  RepSearch search(g, target);
  // The outer ring alone reaches any vertex within floor(n/2) steps.
  for (int length = 0; length <= g.ring_size() / 2; ++length) {
    if (auto rep = search.find(length)) return *rep;
  }
  throw std::logic_error("no representation found for " + g.name());
}

Vertex translate_to_origin(int n, Vertex x, Vertex y) {
  return x < y ? y - x : (n - x + y) % n;
}

PathRep shortest_rep(const CirculantGraph& g, Vertex from, Vertex to) {
  return shortest_rep(g, translate_to_origin(g.ring_size(), from, to));
}

Walk canonical_walk(const PathRep& rep, const CirculantGraph& g,
                    Vertex origin) {
  check_alignment(rep, g);
  const auto& gens = g.generators();
  Walk w{origin, {}};
  w.steps.reserve(static_cast<std::size_t>(rep.length()));
  const auto push = [&](int gen, int count) {
    const int dir = count < 0 ? -1 : 1;
    for (int t = 0; t < std::abs(count); ++t) w.steps.push_back({gen, dir});
  };
  push(1, rep.alpha);
  for (std::size_t k = 1; k < gens.size(); ++k) {
    push(gens[k], rep.lambdas[k - 1]);
  }
  return w;
}

Realization realize(const PathRep& rep, const CirculantGraph& g,
                    Vertex origin) {
  require_unit_generator(g);
  Realization r;
  r.vertices = replay(canonical_walk(rep, g, origin), g);
  std::vector<bool> seen(static_cast<std::size_t>(g.ring_size()), false);
  for (Vertex v : r.vertices) {
    if (seen[static_cast<std::size_t>(v)]) {
      r.is_path = false;
      break;
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return r;
}

std::string to_notation(const PathRep& rep, const CirculantGraph& g) {
  check_alignment(rep, g);
  const auto& gens = g.generators();
  std::ostringstream os;
  const auto term = [&](int count) {
    os << std::abs(count);
    return count < 0 ? '-' : '+';
  };
  os << '(';
  const char a_sign = term(rep.alpha);
  os << 'a' << a_sign;
  for (std::size_t k = 1; k < gens.size(); ++k) {
    os << ", ";
    const char sign = term(rep.lambdas[k - 1]);
    os << 'c' << gens[k] << sign;
  }
  os << ')';
  return os.str();
}

}  // namespace loopnet
