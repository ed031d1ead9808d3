#include "zecap/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

#include "zecap/errors.hpp"
#include "zecap/independence.hpp"
#include "zecap/random.hpp"

namespace zecap {

namespace {

// States closer than this in fidelity count as the same state; S is a set.
constexpr double kDuplicateFidelity = 1.0 - 1e-9;
constexpr double kCoolingRate = 0.995;
constexpr double kInitialAcceptance = 0.6;

struct Candidate {
  std::vector<ComplexVector> psi;
  ComplexMatrix v;  // rows are conjugated measurement vectors: E_j = v_j^dagger v_j
};

struct Evaluation {
  std::size_t pairs = 0;
  std::size_t alpha = 0;
  double energy = 0.0;  // annealing objective, larger is better
};

bool better(const Evaluation& a, const Evaluation& b) {
  if (a.pairs != b.pairs) return a.pairs > b.pairs;
  return a.alpha > b.alpha;
}

Povm povm_of(const ComplexMatrix& v) {
  std::vector<ComplexMatrix> elems;
  elems.reserve(static_cast<std::size_t>(v.rows()));
  for (Eigen::Index j = 0; j < v.rows(); ++j) {
    const ComplexMatrix row = v.row(j);
    elems.push_back(row.adjoint() * row);
  }
  return Povm(static_cast<std::size_t>(v.cols()), std::move(elems), Unchecked{});
}

StateSet states_of(const std::vector<ComplexVector>& psi, bool allow_overcomplete) {
  std::vector<DensityMatrix> states;
  states.reserve(psi.size());
  for (const auto& p : psi) states.push_back(DensityMatrix::pure(p));
  return StateSet(std::move(states), allow_overcomplete);
}

bool has_duplicate(const std::vector<ComplexVector>& psi, std::size_t changed) {
  for (std::size_t b = 0; b < psi.size(); ++b) {
    if (b == changed) continue;
    if (std::norm(psi[changed].dot(psi[b])) > kDuplicateFidelity) return true;
  }
  return false;
}

class Annealer {
 public:
  Annealer(const QuantumChannel& ch, const SearchConfig& cfg, std::size_t restart)
      : ch_(ch), cfg_(cfg), d_(ch.dim()), outcomes_(cfg.general_povm && cfg.povm_outcomes ? cfg.povm_outcomes : d_),
        rng_(cfg.seed + restart), restart_(restart) {}

  struct Outcome {
    Candidate best;
    Evaluation best_eval;
    std::vector<TracePoint> trace;
  };

  Outcome run() {
    Candidate cur = initial();
    std::optional<Evaluation> cur_eval = evaluate(cur);
    // A random start can in principle collide; redraw until it is a valid set.
    while (!cur_eval) {
      cur = initial();
      cur_eval = evaluate(cur);
    }

    Outcome out{cur, *cur_eval, {{0, cur_eval->pairs, cur_eval->alpha}}};
    const std::size_t m = cfg_.M;
    const std::size_t max_pairs = m * (m - 1) / 2;
    double temp = initial_temperature(cur, *cur_eval);

    for (std::size_t it = 1; it <= cfg_.iterations; ++it) {
      if (out.best_eval.pairs == max_pairs && out.best_eval.alpha == m) break;
      Candidate next = propose(cur);
      const std::optional<Evaluation> ev = evaluate(next);
      if (ev) {
        const double delta = ev->energy - cur_eval->energy;
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        if (delta >= 0.0 || (temp > 0.0 && unit(rng_) < std::exp(delta / temp))) {
          cur = std::move(next);
          cur_eval = ev;
          if (better(*cur_eval, out.best_eval)) {
            out.best = cur;
            out.best_eval = *cur_eval;
            out.trace.push_back({it, cur_eval->pairs, cur_eval->alpha});
          }
        }
      }
      temp *= kCoolingRate;
    }
    return out;
  }

 private:
  Candidate initial() {
    Candidate c;
    const ComplexMatrix u = random_unitary(d_, rng_);
    if (restart_ % 2 == 1 && cfg_.M <= d_) {
      // States aligned with the measurement basis.
      for (std::size_t k = 0; k < cfg_.M; ++k) c.psi.push_back(u.col(static_cast<Eigen::Index>(k)));
    } else {
      for (std::size_t k = 0; k < cfg_.M; ++k) c.psi.push_back(random_unit_vector(d_, rng_));
    }
    c.v = measurement_from_basis(u);
    return c;
  }

  // Rows of the returned isometry are the conjugated basis vectors; extra
  // outcomes in general mode start out as zero effects.
  ComplexMatrix measurement_from_basis(const ComplexMatrix& u) const {
    ComplexMatrix v = ComplexMatrix::Zero(static_cast<Eigen::Index>(outcomes_), static_cast<Eigen::Index>(d_));
    v.topRows(static_cast<Eigen::Index>(d_)) = u.adjoint();
    return v;
  }

  std::optional<Evaluation> evaluate(const Candidate& c) const {
    for (std::size_t a = 0; a < c.psi.size(); ++a)
      if (has_duplicate(c.psi, a)) return std::nullopt;
    try {
      const ConfusabilityGraph g =
          confusability_graph(ch_, states_of(c.psi, cfg_.allow_overcomplete), povm_of(c.v), cfg_.eps);
      Evaluation ev;
      ev.pairs = non_adjacent_pair_count(g);
      ev.alpha = independence_number(g.graph).alpha;
      ev.energy = static_cast<double>(ev.pairs) + 0.5 * separation(g);
      if (cfg_.objective == SearchObjective::PairCountThenAlpha)
        ev.energy += 0.5 * static_cast<double>(ev.alpha) / static_cast<double>(cfg_.M + 1);
      return ev;
    } catch (const Error&) {
      return std::nullopt;
    }
  }

  // Mean of 1 - Bhattacharyya overlap over all pairs, in [0, 1]. Gives the
  // annealer a gradient on plateaus of the integer pair count.
  static double separation(const ConfusabilityGraph& g) {
    const auto& p = g.probabilities;
    double total = 0.0;
    std::size_t count = 0;
    for (std::size_t a = 0; a < p.size(); ++a) {
      for (std::size_t b = a + 1; b < p.size(); ++b) {
        double bc = 0.0;
        for (std::size_t j = 0; j < p[a].size(); ++j) bc += std::sqrt(p[a][j] * p[b][j]);
        total += 1.0 - std::min(bc, 1.0);
        ++count;
      }
    }
    return count ? total / static_cast<double>(count) : 0.0;
  }

  double initial_temperature(const Candidate& c, const Evaluation& ev) {
    double worse = 0.0;
    std::size_t n_worse = 0;
    for (int k = 0; k < 32; ++k) {
      const std::optional<Evaluation> trial = evaluate(propose(c));
      if (trial && trial->energy < ev.energy) {
        worse += ev.energy - trial->energy;
        ++n_worse;
      }
    }
    if (n_worse == 0) return 0.5;
    return -(worse / static_cast<double>(n_worse)) / std::log(kInitialAcceptance);
  }

  Candidate propose(const Candidate& c) {
    Candidate n = c;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> pick_state(0, c.psi.size() - 1);
    const double r = unit(rng_);
    if (r < 0.3) {
      const std::size_t a = pick_state(rng_);
      n.psi[a] = random_unitary_step(d_, cfg_.step, rng_) * n.psi[a];
      n.psi[a].normalize();
    } else if (r < 0.5) {
      if (cfg_.general_povm && outcomes_ > d_ && unit(rng_) < 0.5)
        n.v = random_unitary_step(outcomes_, cfg_.step, rng_) * n.v;
      else
        n.v = n.v * random_unitary_step(d_, cfg_.step, rng_);
    } else if (r < 0.7) {
      snap_state(n, pick_state(rng_));
    } else if (r < 0.85) {
      snap_measurement(n);
    } else if (c.psi.size() > 1) {
      const std::size_t a = pick_state(rng_);
      std::size_t b = pick_state(rng_);
      if (b == a) b = (a + 1) % c.psi.size();
      separate_pair(n, a, b);
    }
    return n;
  }

  std::vector<double> probabilities(const Candidate& c, std::size_t k) const {
    const DensityMatrix sigma = apply_channel(ch_, DensityMatrix::pure(c.psi[k]));
    std::vector<double> p(static_cast<std::size_t>(c.v.rows()));
    for (Eigen::Index j = 0; j < c.v.rows(); ++j)
      p[static_cast<std::size_t>(j)] = (c.v.row(j) * sigma.matrix() * c.v.row(j).adjoint())(0, 0).real();
    return p;
  }

  // Moves state a into the (near) kernel of the effect sum_{j in T} E^dagger(E_j),
  // where T is the union of the supports of a random subset of the other states.
  void snap_state(Candidate& c, std::size_t a) {
    std::vector<bool> avoid(static_cast<std::size_t>(c.v.rows()), false);
    std::bernoulli_distribution coin(0.5);
    std::vector<std::size_t> others;
    for (std::size_t b = 0; b < c.psi.size(); ++b)
      if (b != a) others.push_back(b);
    if (others.empty()) return;
    std::vector<std::size_t> chosen;
    for (auto b : others)
      if (coin(rng_)) chosen.push_back(b);
    if (chosen.empty()) chosen.push_back(others[std::uniform_int_distribution<std::size_t>(0, others.size() - 1)(rng_)]);
    for (auto b : chosen) {
      const std::vector<double> p = probabilities(c, b);
      for (std::size_t j = 0; j < p.size(); ++j)
        if (p[j] > cfg_.eps) avoid[j] = true;
    }

    ComplexMatrix effect = ComplexMatrix::Zero(static_cast<Eigen::Index>(d_), static_cast<Eigen::Index>(d_));
    for (Eigen::Index j = 0; j < c.v.rows(); ++j) {
      if (!avoid[static_cast<std::size_t>(j)]) continue;
      const ComplexMatrix row = c.v.row(j);
      effect += row.adjoint() * row;
    }
    effect = adjoint_apply(ch_, effect);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es((effect + effect.adjoint()) * 0.5);
    const Eigen::VectorXd& lam = es.eigenvalues();
    // Eigenvectors whose eigenvalue is within eps of the minimum.
    std::size_t low = 1;
    while (low < static_cast<std::size_t>(lam.size()) && lam(static_cast<Eigen::Index>(low)) <= lam(0) + cfg_.eps) ++low;
    if (low == 1 || coin(rng_)) {
      const std::size_t k = std::uniform_int_distribution<std::size_t>(0, low - 1)(rng_);
      c.psi[a] = es.eigenvectors().col(static_cast<Eigen::Index>(k));
    } else {
      ComplexVector mix = es.eigenvectors().leftCols(static_cast<Eigen::Index>(low)) *
                          random_unit_vector(low, rng_);
      c.psi[a] = mix / mix.norm();
    }
  }

  // Aligns the measurement with the eigenbasis of sigma_a or sigma_a - sigma_b.
  void snap_measurement(Candidate& c) {
    std::uniform_int_distribution<std::size_t> pick(0, c.psi.size() - 1);
    const std::size_t a = pick(rng_);
    ComplexMatrix h = apply_channel(ch_, DensityMatrix::pure(c.psi[a])).matrix();
    if (c.psi.size() > 1 && std::bernoulli_distribution(0.5)(rng_)) {
      std::size_t b = pick(rng_);
      if (b == a) b = (a + 1) % c.psi.size();
      h -= apply_channel(ch_, DensityMatrix::pure(c.psi[b])).matrix();
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es((h + h.adjoint()) * 0.5);
    c.v = measurement_from_basis(es.eigenvectors());
  }

  // Alternates a Helstrom-type measurement (eigenbasis of sigma_a - sigma_b)
  // with moving each state into the kernel of the effects on the other
  // state's side. Converges towards an exactly distinguishable pair when the
  // channel has one near the current point.
  void separate_pair(Candidate& c, std::size_t a, std::size_t b) {
    constexpr int kRounds = 40;
    for (int round = 0; round < kRounds; ++round) {
      const ComplexMatrix sa = apply_channel(ch_, DensityMatrix::pure(c.psi[a])).matrix();
      const ComplexMatrix sb = apply_channel(ch_, DensityMatrix::pure(c.psi[b])).matrix();
      const ComplexMatrix h = sa - sb;
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> es((h + h.adjoint()) * 0.5);
      c.v = measurement_from_basis(es.eigenvectors());
      ComplexMatrix side_a = ComplexMatrix::Zero(static_cast<Eigen::Index>(d_), static_cast<Eigen::Index>(d_));
      ComplexMatrix side_b = side_a;
      for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(d_); ++j) {
        const ComplexMatrix proj = es.eigenvectors().col(j) * es.eigenvectors().col(j).adjoint();
        if (es.eigenvalues()(j) > 0.0)
          side_a += proj;
        else
          side_b += proj;
      }
      // a must avoid b's outcomes and vice versa.
      const ComplexVector next_a = lowest_eigenvector(adjoint_apply(ch_, side_b));
      const ComplexVector next_b = lowest_eigenvector(adjoint_apply(ch_, side_a));
      c.psi[a] = next_a;
      c.psi[b] = next_b;
    }
  }

  static ComplexVector lowest_eigenvector(const ComplexMatrix& m) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es((m + m.adjoint()) * 0.5);
    return es.eigenvectors().col(0);
  }

  const QuantumChannel& ch_;
  const SearchConfig& cfg_;
  std::size_t d_;
  std::size_t outcomes_;
  Rng rng_;
  std::size_t restart_;
};

}  // namespace

void validate_search_config(const SearchConfig& cfg, std::size_t d) {
  if (cfg.M < 2) throw std::invalid_argument("search needs M >= 2");
  if (cfg.restarts < 1) throw std::invalid_argument("search needs at least one restart");
  if (!(cfg.step > 0.0)) throw std::invalid_argument("step size must be positive");
  if (cfg.eps < 0.0) throw std::invalid_argument("support threshold must be non-negative");
  if (!cfg.allow_overcomplete && cfg.M > d)
    throw std::invalid_argument("M = " + std::to_string(cfg.M) + " exceeds dimension " + std::to_string(d));
  if (cfg.general_povm && cfg.povm_outcomes != 0) {
    const std::size_t n = cfg.povm_outcomes;
    if (n < std::max(cfg.M, d) || n > d * d)
      throw std::invalid_argument("general POVM outcome count must lie in [max(M, d), d^2]");
  }
}

StateSet random_pure_state_set(std::size_t d, std::size_t M, std::uint64_t seed) {
  if (M > d) throw std::invalid_argument("random state set needs M <= d");
  Rng rng(seed);
  std::vector<DensityMatrix> states;
  states.reserve(M);
  for (std::size_t k = 0; k < M; ++k) states.push_back(random_pure_state(d, rng));
  return StateSet(std::move(states));
}

Povm random_projective_povm(std::size_t d, std::uint64_t seed) {
  if (d == 0) throw std::invalid_argument("POVM dimension must be at least 1");
  Rng rng(seed);
  return Povm::from_unitary(random_unitary(d, rng));
}

SearchResult optimize_pair(const QuantumChannel& ch, const SearchConfig& cfg) {
  validate_search_config(cfg, ch.dim());

  std::vector<std::optional<Annealer::Outcome>> outcomes(cfg.restarts);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t r = next++; r < cfg.restarts; r = next++) outcomes[r] = Annealer(ch, cfg, r).run();
  };
  const std::size_t threads = std::clamp<std::size_t>(cfg.threads, 1, cfg.restarts);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  // Best by objective; ties go to the lowest restart index.
  std::size_t best = 0;
  for (std::size_t r = 1; r < cfg.restarts; ++r)
    if (better(outcomes[r]->best_eval, outcomes[best]->best_eval)) best = r;

  const Candidate& winner = outcomes[best]->best;
  StateSet states = states_of(winner.psi, cfg.allow_overcomplete);
  Povm povm = povm_of(winner.v);
  ConfusabilityGraph graph = confusability_graph(ch, states, povm, cfg.eps);
  const std::size_t pairs = non_adjacent_pair_count(graph);
  const std::size_t alpha = independence_number(graph.graph).alpha;

  std::vector<std::vector<TracePoint>> history;
  history.reserve(cfg.restarts);
  for (auto& o : outcomes) history.push_back(std::move(o->trace));

  return SearchResult{std::move(states), std::move(povm), std::move(graph), pairs, alpha, best, std::move(history)};
}

}  // namespace zecap
