#include "qbell/optimize.hpp"

#include <cmath>
#include <stdexcept>

#include "qbell/rng.hpp"
#include "qbell/witness.hpp"

namespace qbell {

namespace {

// The objective is bilinear in the frame vectors, so each evaluation only
// needs the precomputed Pauli moments, not matrix traces.
double fast_value(const PauliMoments& m, const Triad& a, const Triad& b) {
  double x1 = 0, x3 = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      x1 += (a.a1[i] * b.a1[j] + a.a2[i] * b.a2[j]) * m.corr[i][j];
      x3 += a.a3[i] * b.a3[j] * m.corr[i][j];
    }
  }
  double x2 = 0;
  for (int i = 0; i < 3; ++i) x2 += a.a3[i] * m.a_marg[i] + b.a3[i] * m.b_marg[i];
  return std::hypot(x1, x2) - x3;
}

double eval_pair(const PauliMoments& m, const Quat& qa, const Quat& qb) {
  return fast_value(m, triad_from_rotation(qa), triad_from_rotation(qb));
}

Quat random_unit_quat(Rng& rng) {
  Quat q;
  do {
    q = {rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
  } while (q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z == 0.0);
  return quat_normalize(q);
}

struct RestartOutcome {
  Quat qa, qb;
  double value = 0;
  int iterations = 0;
  bool converged = false;
};

// Compass search on the 6-dimensional tangent chart: three axis-angle
// increments per quaternion, retraction by quaternion multiplication,
// step halving when no poll direction improves.
RestartOutcome run_restart(const PauliMoments& m, const OptConfig& cfg, Rng rng) {
  RestartOutcome out;
  out.qa = random_unit_quat(rng);
  out.qb = random_unit_quat(rng);
  out.value = eval_pair(m, out.qa, out.qb);

  double step = cfg.step_init;
  for (out.iterations = 0; out.iterations < cfg.max_iters; ++out.iterations) {
    if (step < cfg.tol) {
      out.converged = true;
      break;
    }
    double best = out.value;
    Quat best_qa = out.qa, best_qb = out.qb;
    for (int dim = 0; dim < 6; ++dim) {
      for (const double sign : {+1.0, -1.0}) {
        const Quat inc = quat_axis_angle(dim % 3, sign * step);
        Quat qa = out.qa, qb = out.qb;
        if (dim < 3) {
          qa = quat_normalize(quat_mul(inc, qa));
        } else {
          qb = quat_normalize(quat_mul(inc, qb));
        }
        const double v = eval_pair(m, qa, qb);
        if (v > best) {
          best = v;
          best_qa = qa;
          best_qb = qb;
        }
      }
    }
    if (best > out.value) {
      out.value = best;
      out.qa = best_qa;
      out.qb = best_qb;
    } else {
      step *= 0.5;
    }
  }
  return out;
}

}  // namespace

OptResult maximize_violation(const DensityMatrix& rho, const OptConfig& cfg) {
  if (cfg.restarts < 1 || cfg.max_iters < 1 || !(cfg.step_init > 0) || !(cfg.tol > 0) ||
      !(cfg.tol < cfg.step_init)) {
    throw std::invalid_argument("maximize_violation: invalid OptConfig");
  }

  const PauliMoments m = pauli_moments(rho);
  const Rng root(cfg.seed);

  RestartOutcome best;
  bool have_best = false;
  OptResult result;
  for (int r = 0; r < cfg.restarts; ++r) {
    RestartOutcome o = run_restart(m, cfg, root.split(static_cast<std::uint64_t>(r)));
    result.iterations_used += o.iterations;
    if (o.converged) ++result.restarts_converged;
    if (!have_best || o.value > best.value) {  // ties keep the lowest restart index
      best = o;
      have_best = true;
    }
  }

  result.best_setting =
      make_setting(triad_from_rotation(best.qa), triad_from_rotation(best.qb));
  // Re-evaluate through the exact trace path so the reported value is the
  // one the evaluator itself produces.
  result.best_value = bell_value(rho, result.best_setting);
  return result;
}

}  // namespace qbell
