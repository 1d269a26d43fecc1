#include <algorithm>
#include <sstream>

#include "rloc/solver.hpp"
#include "rloc/strategies.hpp"

namespace rloc {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// --- resolving-set cop -----------------------------------------------------

class ResolvingSetCop : public CopStrategy {
 public:
  explicit ResolvingSetCop(const Graph& g) {
    auto md = metric_dimension(g);
    probes_ = md.witness;
    if (probes_.empty()) probes_.push_back(0);  // single-vertex graph
  }
  int probe_budget() const override { return static_cast<int>(probes_.size()); }
  std::vector<int> next_probes() override { return probes_; }
  void observe(const DistanceVector&) override {}
  std::string name() const override { return "resolving"; }
  std::string state_key() const override { return "resolving"; }

 private:
  std::vector<int> probes_;
};

// --- fixed-probe cop -------------------------------------------------------

class FixedProbeCop : public CopStrategy {
 public:
  FixedProbeCop(const Graph& g, std::vector<int> probes)
      : probes_(sorted_unique(std::move(probes))) {
    if (probes_.empty()) throw std::invalid_argument("fixed cop: no probes");
    for (int p : probes_)
      if (p < 0 || p >= g.vertex_count())
        throw std::invalid_argument("fixed cop: bad vertex");
  }
  int probe_budget() const override { return static_cast<int>(probes_.size()); }
  std::vector<int> next_probes() override { return probes_; }
  void observe(const DistanceVector&) override {}
  std::string name() const override { return "fixed"; }
  std::string state_key() const override { return "fixed"; }

 private:
  std::vector<int> probes_;
};

// --- greedy split cop ------------------------------------------------------

class GreedySplitCop : public CopStrategy {
 public:
  GreedySplitCop(const Graph& g, const GameRules& rules)
      : g_(g),
        rules_(rules),
        dm_(DistanceMatrix::build_serial(g)),
        belief_(VertexSet::full(g.vertex_count())) {
    const int n = g.vertex_count();
    const int k = std::min(rules.k, n);
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
    while (true) {
      probe_sets_.push_back(cur);
      int i = k - 1;
      while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++cur[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  int probe_budget() const override { return rules_.k; }
  std::vector<int> next_probes() override {
    const std::vector<int>* best = nullptr;
    int best_worst = g_.vertex_count() + 1;
    for (const auto& probes : probe_sets_) {
      int worst = 0;
      for (const auto& [dv, cls] : partition_by_probe(dm_, belief_, probes))
        worst = std::max(worst, cls.count());
      if (worst < best_worst) {
        best_worst = worst;
        best = &probes;
      }
    }
    last_probes_ = *best;
    return last_probes_;
  }
  void observe(const DistanceVector& dv) override {
    VertexSet filtered(belief_.universe());
    for (int v = belief_.first(); v != -1; v = belief_.next(v))
      if (distance_vector(dm_, v, last_probes_) == dv) filtered.set(v);
    belief_ = expand(g_, filtered, rules_, last_probes_);
  }
  std::string name() const override { return "greedy-split"; }
  std::string state_key() const override {
    // The belief is the whole state, which lets the verifier prove cycles.
    std::ostringstream key;
    key << "greedy-split|" << belief_.hash() << ":" << belief_.count();
    return key.str();
  }

 private:
  const Graph& g_;
  GameRules rules_;
  DistanceMatrix dm_;
  VertexSet belief_;
  std::vector<std::vector<int>> probe_sets_;
  std::vector<int> last_probes_;
};

// --- extracted cop ---------------------------------------------------------

class ExtractedCop : public CopStrategy {
 public:
  ExtractedCop(const Graph& g, const StrategyTree& tree) : tree_(tree) {
    tree_.validate(g);
  }
  int probe_budget() const override { return tree_.k; }
  std::vector<int> next_probes() override {
    if (done_)
      throw StrategyReplayError("extracted strategy already reached a win leaf");
    return tree_.nodes[static_cast<std::size_t>(cursor_)].probes;
  }
  void observe(const DistanceVector& dv) override {
    const auto& edges = tree_.nodes[static_cast<std::size_t>(cursor_)].edges;
    auto it = std::lower_bound(
        edges.begin(), edges.end(), dv,
        [](const StrategyTree::Edge& e, const DistanceVector& key) {
          return e.key < key;
        });
    if (it == edges.end() || it->key != dv)
      throw StrategyReplayError(
          "reported distance vector has no edge in the strategy tree");
    if (it->win_vertex >= 0)
      done_ = true;
    else
      cursor_ = it->child;
  }
  std::string name() const override { return "extracted"; }

 private:
  const StrategyTree& tree_;
  int cursor_ = 0;
  bool done_ = false;
};

// --- quadratic-bound cop ---------------------------------------------------

// Maintains an anchor v at known distance d from the robber whose shortest
// path enters one of k identified gateway neighbours, and probes the anchor,
// the gateways and their outward extensions. Either some probe improves on d
// (re-anchor there) or a gateway reports exactly d and becomes the new anchor
// with strictly fewer gateways, so (d, k) descends lexicographically.
class QuadraticCop : public CopStrategy {
 public:
  explicit QuadraticCop(const Graph& g) : g_(g), delta_(g.max_degree()) {
    budget_ = ((delta_ + 1) * (delta_ + 1)) / 4 + 1;
  }
  int probe_budget() const override { return budget_; }

  std::vector<int> next_probes() override {
    if (phase_ == Phase::Init) {
      last_probes_ = {0};
      return last_probes_;
    }
    std::vector<int> probes{anchor_};
    for (int w : gateways_) {
      probes.push_back(w);
      int want = delta_ - static_cast<int>(gateways_.size());
      int taken = 0;
      for (int u : g_.neighbors(w)) {
        if (taken >= want) break;
        if (u == anchor_) continue;
        probes.push_back(u);
        ++taken;
      }
    }
    last_probes_ = sorted_unique(std::move(probes));
    if (static_cast<int>(last_probes_.size()) > budget_)
      throw std::logic_error("quadratic cop: probe budget exceeded");
    return last_probes_;
  }

  void observe(const DistanceVector& dv) override {
    int dmin = dv[0], argmin = last_probes_[0];
    for (std::size_t i = 0; i < dv.size(); ++i)
      if (dv[i] < dmin) {
        dmin = dv[i];
        argmin = last_probes_[i];
      }
    if (dmin == 0) {
      phase_ = Phase::Done;
      return;
    }
    if (phase_ == Phase::Init || dmin < dist_) {
      // First anchor, or a probe improved the distance: every neighbour is a
      // candidate gateway again. d strictly drops, so the measure descends.
      anchor_ = argmin;
      dist_ = dmin;
      gateways_ = g_.neighbors(anchor_);
      phase_ = Phase::Anchored;
      return;
    }
    // No improvement: some gateway must have reported exactly dist_, and the
    // robber's path from it avoids every probed vertex.
    int next_anchor = -1;
    for (int w : gateways_) {
      auto it = std::find(last_probes_.begin(), last_probes_.end(), w);
      int reported = dv[static_cast<std::size_t>(it - last_probes_.begin())];
      if (reported == dist_) {
        next_anchor = w;
        break;
      }
    }
    if (next_anchor == -1)
      throw std::logic_error(
          "quadratic cop: no gateway matched the anchor distance");
    std::vector<int> fresh;
    for (int u : g_.neighbors(next_anchor))
      if (!std::binary_search(last_probes_.begin(), last_probes_.end(), u))
        fresh.push_back(u);
    if (fresh.empty() || static_cast<int>(fresh.size()) >= static_cast<int>(gateways_.size()))
      throw std::logic_error("quadratic cop: lexicographic descent violated");
    anchor_ = next_anchor;
    gateways_ = std::move(fresh);
  }

  std::string name() const override { return "quadratic"; }

 private:
  enum class Phase { Init, Anchored, Done };
  const Graph& g_;
  int delta_;
  int budget_;
  Phase phase_ = Phase::Init;
  int anchor_ = -1;
  int dist_ = -1;
  std::vector<int> gateways_;
  std::vector<int> last_probes_;
};

// --- max-degree-3 cop ------------------------------------------------------

class MaxDeg3Cop : public CopStrategy {
 public:
  explicit MaxDeg3Cop(const Graph& g)
      : g_(g),
        dm_(DistanceMatrix::build_serial(g)),
        belief_(VertexSet::full(g.vertex_count())) {
    if (!g.is_connected())
      throw std::invalid_argument("maxdeg3 cop: graph must be connected");
    if (g.max_degree() > 3)
      throw std::invalid_argument("maxdeg3 cop: maximum degree exceeds 3");
    if (detect_k33()) {
      phase_ = Phase::K33First;
    } else {
      phase_ = Phase::Start;
    }
  }
  int probe_budget() const override { return 3; }

  std::vector<int> next_probes() override {
    switch (phase_) {
      case Phase::K33First:
        last_probes_ = sorted_unique({k33_a_, k33_b_, k33_u_});
        break;
      case Phase::K33Second:
        last_probes_ = sorted_unique({k33_a_, k33_b_, k33_v_});
        break;
      case Phase::Start: {
        std::vector<int> probes;
        for (int v = 0; v < std::min(3, g_.vertex_count()); ++v)
          probes.push_back(v);
        last_probes_ = probes;
        break;
      }
      case Phase::DescentA:
        last_probes_ = g_.neighbors(x0_);
        break;
      case Phase::DescentB:
        last_probes_.assign(
            s_set_.begin(),
            s_set_.begin() + std::min<std::ptrdiff_t>(3, static_cast<std::ptrdiff_t>(s_set_.size())));
        break;
      case Phase::DescentC:
        last_probes_ = g_.neighbors(s4_);
        break;
      case Phase::Endgame:
      case Phase::Obs1:
      case Phase::Cases:
      case Phase::CaseVFinish:
      case Phase::ProbeBelief:
        last_probes_ = planned_;
        break;
      case Phase::Done:
        last_probes_ = {0};
        break;
    }
    if (last_probes_.empty() || static_cast<int>(last_probes_.size()) > 3)
      throw std::logic_error("maxdeg3 cop: bad probe list");
    return last_probes_;
  }

  void observe(const DistanceVector& dv) override {
    // Exact candidate set at probe time, then the free-move expansion; under
    // the restricted variant this stays a sound superset.
    filtered_ = VertexSet(belief_.universe());
    for (int v = belief_.first(); v != -1; v = belief_.next(v))
      if (distance_vector(dm_, v, last_probes_) == dv) filtered_.set(v);
    belief_ = expand(g_, filtered_, GameRules{3, MoveRule::FreeMove}, last_probes_);

    int dmin = dv[0], argmin = last_probes_[0];
    for (std::size_t i = 0; i < dv.size(); ++i)
      if (dv[i] < dmin) {
        dmin = dv[i];
        argmin = last_probes_[i];
      }
    if (dmin == 0 || filtered_.count() == 1) {
      phase_ = Phase::Done;
      return;
    }

    switch (phase_) {
      case Phase::K33First:
        phase_ = Phase::K33Second;
        break;
      case Phase::K33Second:
        throw std::logic_error("maxdeg3 cop: K33 opener failed to locate");
      case Phase::Start:
        descend_or_endgame(argmin, dmin);
        break;
      case Phase::DescentA: {
        if (dmin < r_) {
          descend_or_endgame(argmin, dmin);
          break;
        }
        if (dmin > r_)
          throw std::logic_error("maxdeg3 cop: neighbour reports exceeded anchor");
        int x1 = -1;
        for (std::size_t i = 0; i < dv.size(); ++i)
          if (dv[i] == r_) {
            x1 = last_probes_[i];
            break;
          }
        std::vector<int> others;
        for (int u : g_.neighbors(x1))
          if (u != x0_) others.push_back(u);
        if (others.empty()) {
          fallback(argmin, dmin);
          break;
        }
        x1_ = x1;
        x2_ = others[0];
        x3_ = others.size() > 1 ? others[1] : -1;
        std::vector<int> s;
        for (int u : g_.neighbors(x2_)) s.push_back(u);
        if (x3_ != -1)
          for (int u : g_.neighbors(x3_)) s.push_back(u);
        s = sorted_unique(std::move(s));
        std::erase_if(s, [&](int u) { return u == x1_ || u == x2_ || u == x3_; });
        if (s.empty()) {
          fallback(argmin, dmin);
          break;
        }
        s_set_ = std::move(s);
        phase_ = Phase::DescentB;
        break;
      }
      case Phase::DescentB:
        if (dmin < r_) {
          descend_or_endgame(argmin, dmin);
        } else if (s_set_.size() == 4) {
          s4_ = s_set_[3];  // the one unprobed vertex of S
          phase_ = Phase::DescentC;
        } else {
          fallback(argmin, dmin);
        }
        break;
      case Phase::DescentC:
        if (dmin < r_)
          descend_or_endgame(argmin, dmin);
        else
          fallback(argmin, dmin);
        break;
      case Phase::Endgame:
        handle_endgame_reply(argmin, dmin);
        break;
      case Phase::Obs1:
        throw std::logic_error(
            "maxdeg3 cop: common-neighbour observation failed to locate");
      case Phase::Cases:
        handle_cases_reply(argmin, dmin);
        break;
      case Phase::CaseVFinish:
        fallback(argmin, dmin);
        break;
      case Phase::ProbeBelief:
        // Probing every candidate must return a zero somewhere.
        throw std::logic_error("maxdeg3 cop: candidate probe found nobody");
      case Phase::Done:
        break;
    }
  }

  std::string name() const override { return "maxdeg3"; }

 private:
  enum class Phase {
    K33First,
    K33Second,
    Start,
    DescentA,
    DescentB,
    DescentC,
    Endgame,
    Obs1,
    Cases,
    CaseVFinish,
    ProbeBelief,
    Done,
  };

  bool detect_k33() {
    if (g_.vertex_count() != 6) return false;
    for (int v = 0; v < 6; ++v)
      if (g_.degree(v) != 3) return false;
    std::vector<int> side1{0}, side2 = g_.neighbors(0);
    for (int v = 1; v < 6; ++v)
      if (!g_.has_edge(0, v)) side1.push_back(v);
    if (side1.size() != 3 || side2.size() != 3) return false;
    for (int a : side1)
      for (int b : side2)
        if (!g_.has_edge(a, b)) return false;
    k33_a_ = side1[0];
    k33_b_ = side1[1];
    k33_u_ = side2[0];
    k33_v_ = side2[1];
    return true;
  }

  void descend_or_endgame(int vertex, int reported) {
    if (reported == 1) {
      enter_endgame(vertex);
    } else {
      x0_ = vertex;
      r_ = reported;
      phase_ = Phase::DescentA;
    }
  }

  // Re-entry for shapes outside the generic case analysis: finish off a
  // small candidate set directly, otherwise restart the descent at the
  // closest probe.
  void fallback(int argmin, int dmin) {
    if (belief_.count() <= 3) {
      planned_ = belief_.members();
      phase_ = Phase::ProbeBelief;
      return;
    }
    descend_or_endgame(argmin, dmin);
  }

  void enter_endgame(int v) {
    endgame_v_ = v;
    planned_ = g_.neighbors(v);
    phase_ = Phase::Endgame;
  }

  std::vector<int> common_neighbors(int p, int q) const {
    std::vector<int> out;
    const auto& np = g_.neighbors(p);
    const auto& nq = g_.neighbors(q);
    std::set_intersection(np.begin(), np.end(), nq.begin(), nq.end(),
                          std::back_inserter(out));
    return out;
  }

  void enter_obs1(int p, int q, int r, int s) {
    // Third neighbour of p besides r and s, if any.
    auto third = [&](int x) {
      for (int u : g_.neighbors(x))
        if (u != r && u != s) return u;
      return -1;
    };
    int p3 = third(p);
    bool probe_q = (p3 == q) || (p3 == -1) ||
                   !(g_.has_edge(p3, r) && g_.has_edge(p3, s));
    planned_ = sorted_unique({probe_q ? q : p, r, s});
    phase_ = Phase::Obs1;
  }

  void handle_endgame_reply(int argmin, int dmin) {
    if (filtered_.count() == 2) {
      int p = filtered_.first();
      int q = filtered_.next(p);
      auto commons = common_neighbors(p, q);
      if (commons.size() >= 2) {
        enter_obs1(p, q, commons[0], commons[1]);
        return;
      }
      if (commons.size() == 1) {
        int a = commons[0];
        std::vector<int> xs, ys;
        for (int t : g_.neighbors(p))
          if (t != a) xs.push_back(t);
        for (int t : g_.neighbors(q))
          if (t != a) ys.push_back(t);
        if (xs.size() == 2 && ys.size() == 2) {
          enter_cases(a, p, q, xs, ys);
          return;
        }
      }
    }
    fallback(argmin, dmin);
  }

  void enter_cases(int a, int u, int w, std::vector<int> xs, std::vector<int> ys) {
    case_a_ = a;
    case_u_ = u;
    case_w_ = w;
    xs_ = std::move(xs);
    ys_ = std::move(ys);
    std::vector<int> z{xs_[0], xs_[1], ys_[0], ys_[1]};
    auto adj_in_z = [&](int t) {
      int c = 0;
      for (int o : z)
        if (o != t && g_.has_edge(t, o)) ++c;
      return c;
    };
    // (i) someone adjacent to exactly one of the others
    for (int t : z)
      if (adj_in_z(t) == 1) {
        for (int o : z)
          if (o != t && !g_.has_edge(t, o)) {
            planned_ = sorted_unique({case_a_, t, o});
            case_kind_ = 1;
            phase_ = Phase::Cases;
            return;
          }
      }
    // (ii) someone adjacent to two of the others
    for (int t : z)
      if (adj_in_z(t) == 2) {
        for (int o : z)
          if (o != t && g_.has_edge(t, o)) {
            planned_ = sorted_unique({case_a_, t, o});
            case_kind_ = 2;
            phase_ = Phase::Cases;
            return;
          }
      }
    // (iii) a cross pair at distance more than 2: probe the far x and the
    // other y.
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        if (dm_.at(xs_[i], ys_[j]) > 2) {
          planned_ = sorted_unique({case_a_, xs_[i], ys_[1 - j]});
          case_kind_ = 3;
          phase_ = Phase::Cases;
          return;
        }
    // (iv) a pair with two common neighbours: probe the other two.
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        if (common_neighbors(z[i], z[j]).size() >= 2) {
          std::vector<int> rest;
          for (std::size_t t = 0; t < 4; ++t)
            if (t != i && t != j) rest.push_back(z[t]);
          planned_ = sorted_unique({case_a_, rest[0], rest[1]});
          case_kind_ = 4;
          case_pair_ = {z[i], z[j]};
          phase_ = Phase::Cases;
          return;
        }
    // (v) every pair has a unique common neighbour.
    planned_ = sorted_unique({case_a_, xs_[0], xs_[1]});
    case_kind_ = 5;
    phase_ = Phase::Cases;
  }

  void handle_cases_reply(int argmin, int dmin) {
    if (case_kind_ == 4 && filtered_.count() == 2) {
      int p = filtered_.first();
      int q = filtered_.next(p);
      if ((p == case_pair_.first && q == case_pair_.second) ||
          (p == case_pair_.second && q == case_pair_.first)) {
        auto commons = common_neighbors(p, q);
        if (commons.size() >= 2) {
          enter_obs1(p, q, commons[0], commons[1]);
          return;
        }
      }
    }
    if (case_kind_ == 5) {
      // Locations consistent with the robber having sat on the y side.
      planned_ = sorted_unique({xs_[0], ys_[0], ys_[1]});
      phase_ = Phase::CaseVFinish;
      return;
    }
    fallback(argmin, dmin);
  }

  const Graph& g_;
  DistanceMatrix dm_;
  VertexSet belief_;
  VertexSet filtered_;
  Phase phase_ = Phase::Start;
  std::vector<int> last_probes_;
  std::vector<int> planned_;
  int k33_a_ = -1, k33_b_ = -1, k33_u_ = -1, k33_v_ = -1;
  int x0_ = -1, r_ = -1, x1_ = -1, x2_ = -1, x3_ = -1, s4_ = -1;
  std::vector<int> s_set_;
  int endgame_v_ = -1;
  int case_a_ = -1, case_u_ = -1, case_w_ = -1, case_kind_ = 0;
  std::vector<int> xs_, ys_;
  std::pair<int, int> case_pair_{-1, -1};
};

// --- lifted subdivision cop --------------------------------------------------

// Single-probe strategy on an m-subdivision driving a winning k-probe base
// strategy, m >= 2k+2. It alternates two phases: sweep branch vertices until
// the robber is located or shows up at a (near-)midpoint, then probe the
// current base node's set while forcing him to his next branch vertex. The
// mod-m residue of every answer tells the cop whether he is at a branch
// vertex or a (near-)midpoint, and otherwise the nearest multiple of m gives
// the base distance to his nearest branch vertex, which stays fixed between
// midpoint visits. Arrivals at branch vertices replay the collected base
// responses through the strategy tree.
class LiftedSubdivisionCop : public CopStrategy {
 public:
  LiftedSubdivisionCop(const SubdividedGraph& sg, const StrategyTree& base_tree)
      : sg_(sg),
        tree_(base_tree),
        base_(sg.base()),
        m_(sg.m()),
        nb_(base_.vertex_count()),
        base_dm_(DistanceMatrix::build_serial(base_)) {
    tree_.validate(base_);
    if (m_ < 2 * tree_.k + 2)
      throw std::invalid_argument("lifted cop: need m >= 2k+2");
    if (nb_ == 1) {
      mode_ = Mode::Trivial;
      return;
    }
    reset_identify();
    load_node(0);
  }

  int probe_budget() const override { return 1; }

  std::vector<int> next_probes() override {
    int base_vertex = -1;
    switch (mode_) {
      case Mode::Trivial:
        base_vertex = 0;
        break;
      case Mode::IdentifyNearest:
      case Mode::FindThread:
        base_vertex = sweep_pos_;
        sweep_pos_ = (sweep_pos_ + 1) % nb_;
        last_role_ = Role::Sweep;
        break;
      case Mode::ToBranch:
        if (at_mid_last_ || a_pos_ >= static_cast<int>(a_list_.size())) {
          base_vertex = next_unprobed_in_phase();
          last_role_ = Role::NewBranch;
        } else {
          base_vertex = a_list_[static_cast<std::size_t>(a_pos_)];
          last_role_ = Role::AProbe;
        }
        break;
    }
    last_base_probe_ = base_vertex;
    return {sg_.branch_vertex(base_vertex)};
  }

  void observe(const DistanceVector& dv) override {
    if (mode_ == Mode::Trivial) return;
    const int d = dv[0];
    auto rc = classify_probe_residue(d, m_);
    const bool at_mid = rc.kind == ProbeResidue::AtMidpoint ||
                        rc.kind == ProbeResidue::AtNearMidpoint;
    if (mode_ == Mode::ToBranch) mark_phase_probe(last_base_probe_);

    switch (mode_) {
      case Mode::Trivial:
        return;
      case Mode::IdentifyNearest: {
        // Once the base strategy has won the belief is a singleton and play
        // never reaches this point; sweep blindly if it somehow does.
        if (done_expected_) return;
        if (at_mid) {
          enter_to_branch();
          return;
        }
        int c = nearest_branch_base_distance(d, m_);
        VertexSet next(nb_);
        for (int u = v_cands_.first(); u != -1; u = v_cands_.next(u))
          if (base_dm_.at(last_base_probe_, u) == c) next.set(u);
        if (next.empty())
          throw std::logic_error("lifted cop: nearest-branch candidates vanished");
        v_cands_ = next;
        if (v_cands_.count() == 1) {
          mode_ = Mode::FindThread;
          sweep_pos_ = 0;
        }
        return;
      }
      case Mode::FindThread:
        if (at_mid && !done_expected_) enter_to_branch();
        return;
      case Mode::ToBranch: {
        if (at_mid) {
          at_mid_last_ = true;
          a_pos_ = 0;  // a restart begins with the first base probe again
          std::fill(responses_.begin(), responses_.end(), -1);
          return;
        }
        int c = nearest_branch_base_distance(d, m_);
        if (rc.kind == ProbeResidue::AtBranch) {
          if (last_role_ == Role::AProbe)
            responses_[static_cast<std::size_t>(a_pos_)] = c;
          handle_arrival();
          return;
        }
        // Interior, off the midpoints.
        if (at_mid_last_) {
          // He has just left the (near-)midpoints; the base probes restart
          // next turn.
          at_mid_last_ = false;
          a_pos_ = 0;
          std::fill(responses_.begin(), responses_.end(), -1);
          return;
        }
        if (last_role_ == Role::AProbe) {
          responses_[static_cast<std::size_t>(a_pos_)] = c;
          ++a_pos_;
        }
        return;
      }
    }
  }

  std::string name() const override { return "lifted"; }

 private:
  enum class Mode { Trivial, IdentifyNearest, FindThread, ToBranch };
  enum class Role { Sweep, NewBranch, AProbe };

  void reset_identify() {
    mode_ = Mode::IdentifyNearest;
    v_cands_ = VertexSet::full(nb_);
    sweep_pos_ = 0;
  }

  void load_node(int node) {
    cursor_ = node;
    a_list_ = tree_.nodes[static_cast<std::size_t>(node)].probes;
    responses_.assign(a_list_.size(), -1);
    a_pos_ = 0;
  }

  void enter_to_branch() {
    mode_ = Mode::ToBranch;
    phase_probed_.assign(static_cast<std::size_t>(nb_), 0);
    mark_phase_probe(last_base_probe_);
    at_mid_last_ = true;
    a_pos_ = 0;
    std::fill(responses_.begin(), responses_.end(), -1);
  }

  void mark_phase_probe(int b) { phase_probed_[static_cast<std::size_t>(b)] = 1; }

  int next_unprobed_in_phase() const {
    for (int b = 0; b < nb_; ++b)
      if (!phase_probed_[static_cast<std::size_t>(b)]) return b;
    throw std::logic_error(
        "lifted cop: every branch vertex probed without locating");
  }

  void handle_arrival() {
    if (done_expected_)
      throw std::logic_error("lifted cop: arrival after the base strategy won");
    for (int r : responses_)
      if (r < 0)
        throw std::logic_error(
            "lifted cop: branch arrival before the base probes completed");
    const auto& edges = tree_.nodes[static_cast<std::size_t>(cursor_)].edges;
    auto it = std::lower_bound(
        edges.begin(), edges.end(), responses_,
        [](const StrategyTree::Edge& e, const std::vector<int>& key) {
          return e.key < key;
        });
    if (it == edges.end() || it->key != responses_)
      throw StrategyReplayError(
          "lifted cop: collected base responses match no strategy edge");
    if (it->win_vertex >= 0) {
      // The base strategy has located him; the belief collapses on this
      // probe. Keep sweeping defensively in case play continues.
      done_expected_ = true;
      reset_identify();
      return;
    }
    load_node(it->child);
    reset_identify();
  }

  const SubdividedGraph& sg_;
  const StrategyTree& tree_;
  const Graph& base_;
  int m_;
  int nb_;
  DistanceMatrix base_dm_;

  Mode mode_ = Mode::IdentifyNearest;
  Role last_role_ = Role::Sweep;
  int last_base_probe_ = -1;
  bool done_expected_ = false;

  VertexSet v_cands_;
  int sweep_pos_ = 0;

  std::vector<char> phase_probed_;
  bool at_mid_last_ = false;
  int cursor_ = 0;
  std::vector<int> a_list_;
  std::vector<int> responses_;
  int a_pos_ = 0;
};

}  // namespace

std::unique_ptr<CopStrategy> make_lifted_subdivision_cop(
    const SubdividedGraph& sg, const StrategyTree& base_strategy) {
  return std::make_unique<LiftedSubdivisionCop>(sg, base_strategy);
}

std::unique_ptr<CopStrategy> make_resolving_set_cop(const Graph& g) {
  return std::make_unique<ResolvingSetCop>(g);
}

std::unique_ptr<CopStrategy> make_fixed_probe_cop(const Graph& g,
                                                  std::vector<int> probes) {
  return std::make_unique<FixedProbeCop>(g, std::move(probes));
}

std::unique_ptr<CopStrategy> make_greedy_split_cop(const Graph& g,
                                                   const GameRules& rules) {
  return std::make_unique<GreedySplitCop>(g, rules);
}

std::unique_ptr<CopStrategy> make_extracted_cop(const Graph& g,
                                                const StrategyTree& tree) {
  return std::make_unique<ExtractedCop>(g, tree);
}

std::unique_ptr<CopStrategy> make_quadratic_cop(const Graph& g) {
  return std::make_unique<QuadraticCop>(g);
}

std::unique_ptr<CopStrategy> make_maxdeg3_cop(const Graph& g) {
  return std::make_unique<MaxDeg3Cop>(g);
}

}  // namespace rloc
