#include "bridge/chord_state.hpp"

#include <cassert>
#include <map>

#include "bridge/error.hpp"

namespace bridge {

ChordState::ChordState(const ArcSystem& arcs) : n_(arcs.n()) {
  const int m = 2 * n_;
  std::vector<int> counts = arcs.crossing_counts();
  pts_.reserve(m + static_cast<std::size_t>(intersection_number(arcs)));
  puncture_point_.resize(m);
  label_at_ = arcs.label_at_punctures();

  // crossing_point[t-1][rank-1] = point id
  std::vector<std::vector<int>> crossing_point(m);
  int last = -1, head = -1;
  for (int k = 1; k <= m; ++k) {
    int p = add_point(k);
    puncture_point_[k - 1] = p;
    if (head < 0)
      head = p;
    if (last >= 0) {
      pts_[last].next = p;
      pts_[p].prev = last;
    }
    last = p;
    for (int r = 1; r <= counts[k - 1]; ++r) {
      int c = add_point(0);
      crossing_point[k - 1].push_back(c);
      pts_[last].next = c;
      pts_[c].prev = last;
      last = c;
    }
  }
  pts_[last].next = head;
  pts_[head].prev = last;

  auto id_of = [&](const Anchor& a) {
    return a.is_puncture() ? puncture_point_[a.index - 1] : crossing_point[a.interval - 1][a.index - 1];
  };
  for (const Arc& arc : arcs.arcs())
    for (std::size_t e = 0; e + 1 < arc.anchors.size(); ++e)
      link(id_of(arc.anchors[e]), id_of(arc.anchors[e + 1]), arc.hemisphere_of(e));
}

int ChordState::add_point(int puncture) {
  Point p;
  p.puncture = puncture;
  pts_.push_back(p);
  ++live_;
  return static_cast<int>(pts_.size()) - 1;
}

void ChordState::insert_before(int id, int before) {
  int prev = pts_[before].prev;
  pts_[id].prev = prev;
  pts_[id].next = before;
  pts_[prev].next = id;
  pts_[before].prev = id;
}

void ChordState::unlink(int id) {
  Point& p = pts_[id];
  pts_[p.prev].next = p.next;
  pts_[p.next].prev = p.prev;
  p.alive = false;
  --live_;
}

int& ChordState::partner(int id, Hemisphere h) { return h == Hemisphere::upper ? pts_[id].up : pts_[id].down; }

int ChordState::partner_of(int id, Hemisphere h) const {
  return h == Hemisphere::upper ? pts_[id].up : pts_[id].down;
}

void ChordState::link(int a, int b, Hemisphere h) {
  partner(a, h) = b;
  partner(b, h) = a;
}

ArcSystem ChordState::normal_form() const {
  const int m = 2 * n_;
  std::vector<Anchor> anchor_of(pts_.size());
  int interval = 0, rank = 0;
  int id = puncture_point_[0];
  do {
    const Point& p = pts_[id];
    if (p.puncture) {
      interval = p.puncture;
      rank = 0;
      anchor_of[id] = Anchor::puncture(p.puncture);
    } else {
      anchor_of[id] = Anchor::crossing(interval, ++rank);
    }
    id = p.next;
  } while (id != puncture_point_[0]);

  std::vector<Arc> arcs;
  std::vector<bool> done(m + 1, false);
  for (int k = 1; k <= m; ++k) {
    if (done[k])
      continue;
    Arc arc;
    arc.label = label_at_[k - 1];
    int cur = puncture_point_[k - 1];
    Hemisphere h = pts_[cur].up >= 0 ? Hemisphere::upper : Hemisphere::lower;
    arc.first = h;
    arc.anchors.push_back(anchor_of[cur]);
    while (true) {
      cur = partner_of(cur, h);
      arc.anchors.push_back(anchor_of[cur]);
      if (pts_[cur].puncture)
        break;
      h = opposite(h);
    }
    done[k] = true;
    done[pts_[cur].puncture] = true;
    arcs.push_back(std::move(arc));
  }
  return ArcSystem(ArcSystem::trusted, n_, std::move(arcs));
}

// x and y adjacent on l. Removes the bigon or half-bigon they bound, if any.
bool ChordState::try_remove_bigon(int x, int y, std::vector<int>& touched) {
  Hemisphere h;
  if (pts_[x].up == y)
    h = Hemisphere::upper;
  else if (pts_[x].down == y)
    h = Hemisphere::lower;
  else
    return false;
  bool px = pts_[x].puncture != 0, py = pts_[y].puncture != 0;
  if (px && py)
    return false;
  const Hemisphere other = opposite(h);

  if (!px && !py) {
    int w = partner_of(x, other);
    int z = partner_of(y, other);
    touched.insert(touched.end(), {pts_[x].prev, pts_[x].next, pts_[y].prev, pts_[y].next, w, z});
    unlink(x);
    unlink(y);
    link(w, z, other);
    return true;
  }

  // Half-bigon: the arc leaves its endpoint and comes straight back across l
  // beside it. Rotating the arc about the endpoint removes the crossing.
  int p = px ? x : y;
  int c = px ? y : x;
  int w = partner_of(c, other);
  touched.insert(touched.end(), {pts_[c].prev, pts_[c].next, p, w});
  unlink(c);
  partner(p, h) = -1;
  link(p, w, other);
  return true;
}

void ChordState::reduce() {
  std::vector<int> work;
  work.reserve(pts_.size());
  for (int id = 0; id < static_cast<int>(pts_.size()); ++id)
    if (pts_[id].alive)
      work.push_back(id);
  std::vector<int> touched;
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    if (!pts_[x].alive)
      continue;
    touched.clear();
    if (try_remove_bigon(x, pts_[x].next, touched) || try_remove_bigon(x, pts_[x].prev, touched))
      for (int t : touched)
        if (t >= 0 && pts_[t].alive)
          work.push_back(t);
  }
  // An arc parallel to an empty interval swings across it freely; keep it on
  // the upper side so that the normal form is unique.
  for (int id = 0; id < static_cast<int>(pts_.size()); ++id) {
    Point& p = pts_[id];
    if (p.alive && p.puncture && p.down >= 0 && p.down == p.next) {
      pts_[p.next].up = id;
      pts_[p.next].down = -1;
      p.up = p.next;
      p.down = -1;
    }
  }
}

bool ChordState::is_reduced() const {
  for (int id = 0; id < static_cast<int>(pts_.size()); ++id) {
    const Point& p = pts_[id];
    if (!p.alive)
      continue;
    int q = p.next;
    if ((p.up == q || p.down == q) && !(p.puncture && pts_[q].puncture))
      return false;
    if (p.puncture && p.down == q)
      return false;
  }
  return true;
}

void ChordState::swap_hemispheres() {
  for (Point& p : pts_)
    std::swap(p.up, p.down);
}

// Model: a thin disk D around the segment [p_j, p_{j+1}] of l. Inside D the
// arcs are vertical strands through the crossings of interval j plus the two
// endpoint strands at p_j and p_{j+1}. The counterclockwise half-twist sends
//   a strand through crossing x  to  three crossings: a_x just left of p_j,
//     b_x inside interval j (order reversed), c_x just right of p_{j+1};
//   the strand leaving p_j upward  to  p_{j+1} -> lower -> a -> upper;
//   p_j downward to p_{j+1} -> upper -> c -> lower;
//   p_{j+1} upward to p_j -> lower -> a -> upper;
//   p_{j+1} downward to p_j -> upper -> c -> lower.
// The a-points keep the left-to-right order of the upper exits of D, the
// c-points that of the lower exits. Chords outside D are unchanged except
// that an upper chord ending at a strand now ends at its a-point and a lower
// chord at its c-point.
void ChordState::half_twist(int j, int sign) {
  if (j < 1 || j > 2 * n_ - 1)
    throw bridge_error(errc::index_out_of_range, "generator index " + std::to_string(j) + " out of range");
  if (sign < 0) {
    // Conjugating by the reflection across l reverses the sense of rotation.
    swap_hemispheres();
    half_twist(j, 1);
    swap_hemispheres();
    return;
  }

  const int left = puncture_point_[j - 1];
  const int right = puncture_point_[j];

  std::vector<int> strands; // crossings of interval j, left to right
  for (int id = pts_[left].next; id != right; id = pts_[id].next)
    strands.push_back(id);

  // Snapshot the chords leaving D before anything is rewritten.
  struct Old {
    int up, down;
  };
  std::map<int, Old> old;
  for (int x : strands)
    old[x] = {pts_[x].up, pts_[x].down};
  old[left] = {pts_[left].up, pts_[left].down};
  old[right] = {pts_[right].up, pts_[right].down};

  const int k = static_cast<int>(strands.size());
  std::vector<int> a(k), b(k), c(k);
  for (int i = 0; i < k; ++i) {
    a[i] = add_point(0);
    b[i] = add_point(0);
    c[i] = add_point(0);
  }
  const bool left_up = old[left].up >= 0;
  const bool right_up = old[right].up >= 0;
  const int a_left = left_up ? add_point(0) : -1;
  const int c_left = left_up ? -1 : add_point(0);
  const int a_right = right_up ? add_point(0) : -1;
  const int c_right = right_up ? -1 : add_point(0);

  std::map<int, int> top_rep, bottom_rep;
  for (int i = 0; i < k; ++i) {
    top_rep[strands[i]] = a[i];
    bottom_rep[strands[i]] = c[i];
  }
  if (left_up)
    top_rep[left] = a_left;
  else
    bottom_rep[left] = c_left;
  if (right_up)
    top_rep[right] = a_right;
  else
    bottom_rep[right] = c_right;
  auto through_top = [&](int q) {
    auto it = top_rep.find(q);
    return it == top_rep.end() ? q : it->second;
  };
  auto through_bottom = [&](int q) {
    auto it = bottom_rep.find(q);
    return it == bottom_rep.end() ? q : it->second;
  };

  for (int x : strands)
    unlink(x);
  pts_[left].up = pts_[left].down = -1;
  pts_[right].up = pts_[right].down = -1;

  // Chords leaving D, re-attached at the new exit points.
  for (int i = 0; i < k; ++i) {
    link(a[i], through_top(old[strands[i]].up), Hemisphere::upper);
    link(c[i], through_bottom(old[strands[i]].down), Hemisphere::lower);
  }
  if (left_up)
    link(a_left, through_top(old[left].up), Hemisphere::upper);
  else
    link(c_left, through_bottom(old[left].down), Hemisphere::lower);
  if (right_up)
    link(a_right, through_top(old[right].up), Hemisphere::upper);
  else
    link(c_right, through_bottom(old[right].down), Hemisphere::lower);

  // Chords inside D.
  for (int i = 0; i < k; ++i) {
    link(a[i], b[i], Hemisphere::lower);
    link(b[i], c[i], Hemisphere::upper);
  }
  if (left_up)
    link(a_left, right, Hemisphere::lower);
  else
    link(c_left, right, Hemisphere::upper);
  if (right_up)
    link(a_right, left, Hemisphere::lower);
  else
    link(c_right, left, Hemisphere::upper);

  // New order along l.
  if (a_left >= 0)
    insert_before(a_left, left);
  for (int i = 0; i < k; ++i)
    insert_before(a[i], left);
  if (a_right >= 0)
    insert_before(a_right, left);
  for (int i = k - 1; i >= 0; --i)
    insert_before(b[i], right);
  int after = pts_[right].next;
  if (c_left >= 0)
    insert_before(c_left, after);
  for (int i = 0; i < k; ++i)
    insert_before(c[i], after);
  if (c_right >= 0)
    insert_before(c_right, after);

  std::swap(label_at_[j - 1], label_at_[j]);
}

int ChordState::find_anchor(const Anchor& target) const {
  int interval = 0, rank = 0;
  int id = puncture_point_[0];
  do {
    const Point& p = pts_[id];
    if (p.puncture) {
      interval = p.puncture;
      rank = 0;
      if (target.is_puncture() && target.index == p.puncture)
        return id;
    } else if (!target.is_puncture() && interval == target.interval && ++rank == target.index) {
      return id;
    }
    id = p.next;
  } while (id != puncture_point_[0]);
  throw bridge_error(errc::index_out_of_range, "no anchor " + to_string(target));
}

void ChordState::wiggle(const Anchor& anchor) {
  if (anchor.is_puncture())
    throw bridge_error(errc::invalid_arc_system, "wiggle needs a crossing");
  int x = find_anchor(anchor);
  int up = pts_[x].up, down = pts_[x].down;
  // up -> x1 -> (lower) x2 -> (upper) x3 -> down, all adjacent on l.
  int x1 = add_point(0), x2 = add_point(0), x3 = add_point(0);
  insert_before(x1, x);
  insert_before(x2, x);
  insert_before(x3, x);
  unlink(x);
  link(x1, up, Hemisphere::upper);
  link(x1, x2, Hemisphere::lower);
  link(x2, x3, Hemisphere::upper);
  link(x3, down, Hemisphere::lower);
}

void ChordState::wiggle_endpoint(int k, bool right) {
  int p = puncture_point_.at(k - 1);
  Hemisphere h = pts_[p].up >= 0 ? Hemisphere::upper : Hemisphere::lower;
  int q = partner_of(p, h);
  int c = add_point(0);
  insert_before(c, right ? pts_[p].next : p);
  partner(p, h) = -1;
  link(p, c, opposite(h));
  link(c, q, h);
}

} // namespace bridge
