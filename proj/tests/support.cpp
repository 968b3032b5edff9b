#include "support.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "bridge/curve_engine.hpp"

namespace support {

using namespace bridge;

std::filesystem::path data_path(const std::string& name) { return std::filesystem::path(BRIDGE_DATA_DIR) / name; }

PlatWord random_word(std::mt19937& rng, int n, int length) {
  PlatWord w;
  w.n = n;
  std::uniform_int_distribution<int> index(1, 2 * n - 1);
  for (int k = 0; k < length; ++k)
    w.letters.push_back({index(rng), rng() % 2 ? 1 : -1});
  return w;
}

ArcSystem random_system(std::mt19937& rng, int n, int max_length) {
  std::uniform_int_distribution<int> length(0, max_length);
  return apply_word(canonical_top_arcs(n), random_word(rng, n, length(rng)));
}

namespace {

// Points of l in order: p_1, crossings of interval 1, p_2, ...
struct LinePoint {
  Anchor anchor;
};

void non_crossing_matchings(const std::vector<int>& pts, std::size_t from, std::vector<int>& partner,
                            const std::function<void()>& emit) {
  // pts are indices into the line, in increasing order; match pts[from..].
  std::size_t first = from;
  while (first < pts.size() && partner[pts[first]] != -1)
    ++first;
  if (first == pts.size()) {
    emit();
    return;
  }
  // Match pts[first] with some pts[k] so the stretch between them is matched internally.
  for (std::size_t k = first + 1; k < pts.size(); k += 2) {
    if (partner[pts[k]] != -1)
      continue;
    bool inner_free = true;
    for (std::size_t m = first + 1; m < k; ++m)
      inner_free = inner_free && partner[pts[m]] == -1;
    if (!inner_free)
      continue;
    partner[pts[first]] = pts[k];
    partner[pts[k]] = pts[first];
    // Inner stretch first, then the rest; recursion handles both since the
    // leftmost unmatched point inside comes next.
    non_crossing_matchings(pts, first + 1, partner, emit);
    partner[pts[first]] = -1;
    partner[pts[k]] = -1;
  }
}

} // namespace

std::vector<ArcSystem> enumerate_systems(int n, int max_crossings) {
  std::vector<ArcSystem> out;
  const int m = 2 * n;

  std::vector<int> counts(m, 0);
  std::function<void(int, int)> compositions = [&](int t, int left) {
    if (t == m) {
      std::vector<Anchor> line;
      for (int k = 1; k <= m; ++k) {
        line.push_back(Anchor::puncture(k));
        for (int r = 1; r <= counts[k - 1]; ++r)
          line.push_back(Anchor::crossing(k, r));
      }
      const int size = static_cast<int>(line.size());
      for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<int> up_pts, down_pts;
        for (int p = 0; p < size; ++p) {
          bool upper = line[p].is_puncture() ? (mask >> (line[p].index - 1)) & 1 : true;
          bool lower = line[p].is_puncture() ? !((mask >> (line[p].index - 1)) & 1) : true;
          if (upper)
            up_pts.push_back(p);
          if (lower)
            down_pts.push_back(p);
        }
        if (up_pts.size() % 2 || down_pts.size() % 2)
          continue;
        std::vector<int> up(size, -1), down(size, -1);
        non_crossing_matchings(up_pts, 0, up, [&] {
          non_crossing_matchings(down_pts, 0, down, [&] {
            // Trace the paths from each puncture; reject closed loops.
            std::vector<bool> seen(size, false);
            std::vector<Arc> arcs;
            for (int p = 0; p < size; ++p) {
              if (!line[p].is_puncture() || seen[p])
                continue;
              Arc arc;
              arc.first = up[p] != -1 ? Hemisphere::upper : Hemisphere::lower;
              int cur = p;
              Hemisphere h = arc.first;
              arc.anchors.push_back(line[cur]);
              seen[cur] = true;
              while (true) {
                cur = h == Hemisphere::upper ? up[cur] : down[cur];
                seen[cur] = true;
                arc.anchors.push_back(line[cur]);
                if (line[cur].is_puncture())
                  break;
                h = opposite(h);
              }
              arcs.push_back(arc);
            }
            if (std::find(seen.begin(), seen.end(), false) != seen.end())
              return;
            std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
              return std::min(a.start(), a.end()) < std::min(b.start(), b.end());
            });
            for (std::size_t r = 0; r < arcs.size(); ++r)
              arcs[r].label = static_cast<int>(r) + 1;
            out.emplace_back(n, arcs);
          });
        });
      }
      return;
    }
    for (int c = 0; c <= left; ++c) {
      counts[t] = c;
      compositions(t + 1, left - c);
    }
    counts[t] = 0;
  };
  compositions(0, max_crossings);
  return out;
}

namespace {

struct Circle {
  std::vector<Anchor> order; // positions 0..N-1 along l from p_1
  std::map<Anchor, int> index;

  explicit Circle(const ArcSystem& arcs) {
    std::vector<int> counts = arcs.crossing_counts();
    for (int k = 1; k <= 2 * arcs.n(); ++k) {
      order.push_back(Anchor::puncture(k));
      for (int r = 1; r <= counts[k - 1]; ++r)
        order.push_back(Anchor::crossing(k, r));
    }
    for (int p = 0; p < static_cast<int>(order.size()); ++p)
      index[order[p]] = p;
  }

  int size() const { return static_cast<int>(order.size()); }

  // Sub-intervals (s, s+1 mod N) making up δ_i.
  std::vector<int> gap_pieces(int n, int i) const {
    const int from = index.at(Anchor::puncture(2 * i));
    const int to = index.at(Anchor::puncture(i == n ? 1 : 2 * i + 1));
    std::vector<int> pieces;
    for (int s = from; s != to; s = (s + 1) % size())
      pieces.push_back(s);
    return pieces;
  }
};

// 1 when the piece (s, s+1) lies between u and v (u < v), 0 otherwise.
int piece_side(int s, int u, int v) { return u <= s && s < v ? 1 : 0; }

} // namespace

bool brute_separates(const ArcSystem& arcs, const Anchor& a, const Anchor& b, int i, int j) {
  Circle c(arcs);
  int u = c.index.at(a), v = c.index.at(b);
  if (u > v)
    std::swap(u, v);
  std::set<int> side_i, side_j;
  for (int s : c.gap_pieces(arcs.n(), i))
    side_i.insert(piece_side(s, u, v));
  for (int s : c.gap_pieces(arcs.n(), j))
    side_j.insert(piece_side(s, u, v));
  return side_i.size() == 1 && side_j.size() == 1 && *side_i.begin() != *side_j.begin();
}

long long brute_side_size(const ArcSystem& arcs, const Anchor& a, const Anchor& b, int i) {
  Circle c(arcs);
  int u = c.index.at(a), v = c.index.at(b);
  if (u > v)
    std::swap(u, v);
  bool inside = piece_side(c.gap_pieces(arcs.n(), i).front(), u, v) == 1;
  long long count = 0;
  for (int p = 0; p < c.size(); ++p)
    if (p != u && p != v && (u < p && p < v) == inside)
      ++count;
  return count;
}

int brute_width(const std::string& word) {
  int strands = 0, total = 0;
  for (std::size_t k = 0; k < word.size(); ++k) {
    strands += word[k] == 'v' ? 2 : -2;
    if (k + 1 < word.size())
      total += strands;
  }
  return total;
}

std::vector<std::string> valid_morse_words(int maxima) {
  std::vector<std::string> out;
  std::function<void(std::string, int, int)> grow = [&](std::string w, int mins, int strands) {
    const int maxs = static_cast<int>(w.size()) - mins;
    if (mins == maxima && maxs == maxima) {
      out.push_back(w);
      return;
    }
    if (mins < maxima)
      grow(w + 'v', mins + 1, strands + 2);
    // A maximum may only bring the count to 0 at the very end.
    if (maxs < maxima && (strands - 2 >= 2 || (strands - 2 == 0 && mins == maxima && maxs + 1 == maxima)))
      grow(w + '^', mins, strands - 2);
  };
  grow("", 0, 0);
  return out;
}

std::vector<std::pair<int, int>> adjacent_pairs(const std::vector<int>& labels) {
  std::set<std::pair<int, int>> pairs;
  for (std::size_t k = 0; k + 1 < labels.size(); ++k)
    if (labels[k] != labels[k + 1])
      pairs.insert({std::min(labels[k], labels[k + 1]), std::max(labels[k], labels[k + 1])});
  return {pairs.begin(), pairs.end()};
}

} // namespace support
