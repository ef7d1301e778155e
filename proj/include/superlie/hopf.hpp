#pragma once

#include <deque>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "superlie/algebra.hpp"
#include "superlie/errors.hpp"
#include "superlie/free_algebra.hpp"
#include "superlie/presentation.hpp"

namespace superlie {

// Smallest bracket-closed graded subspace containing the seeds.
inline GradedSubspace ideal_closure(const LieSuperalgebra& L, const std::vector<SparseVec>& seeds) {
  GradedSubspace span = GradedSubspace::zero(L);
  std::deque<SparseVec> work;
  auto feed = [&](const SparseVec& v) {
    SparseVec even = v.filtered([&](Key k) { return k < L.even_dim(); });
    SparseVec odd = v.filtered([&](Key k) { return k >= L.even_dim(); });
    for (SparseVec* part : {&even, &odd}) {
      if (part->zero()) continue;
      if (span.insert(*part)) work.push_back(std::move(*part));
    }
  };
  for (const auto& s : seeds) feed(s);
  while (!work.empty()) {
    SparseVec v = std::move(work.front());
    work.pop_front();
    for (auto& [j, w] : L.bracket_with_basis(v)) {
      (void)j;
      feed(w);
    }
  }
  return span;
}

// Evaluates a bracket word in the free algebra.
inline SparseVec eval_term(const TruncatedFreeAlgebra& F, const BracketTerm& t) {
  switch (t.kind) {
    case BracketTerm::Kind::generator:
      return SparseVec::unit(F.generator_basis_index(t.gen));
    case BracketTerm::Kind::bracket:
      return F.algebra().bracket(eval_term(F, t.args[0]), eval_term(F, t.args[1]));
    case BracketTerm::Kind::sum: {
      SparseVec acc;
      for (const auto& a : t.args) acc.add_scaled(eval_term(F, a), Rational(1));
      return acc;
    }
    case BracketTerm::Kind::scale: {
      SparseVec v = eval_term(F, t.args[0]);
      v.scale(t.coeff);
      return v;
    }
  }
  throw InternalError("bad term kind");
}

// One full oracle computation over a free presentation 0 -> R -> F -> L:
// the multiplier (F' cap R)/[F,R] with representative words, the exterior
// square F'/[F,R], and the epicenter as the image of Z(F/[F,R]) in L.
struct OracleRun {
  std::shared_ptr<const TruncatedFreeAlgebra> free_algebra;
  std::vector<std::string> generator_names;
  GradedSubspace relator_ideal;  // R inside F
  GradedSubspace bracket_ideal;  // [F,R] inside F
  Quotient presented;            // L = F/R
  SuperDim presented_dim;
  SuperDim derived_dim;          // of L
  SuperDim multiplier;
  std::vector<SparseVec> multiplier_reps;  // vectors in F coordinates
  SuperDim exterior_square;
  SuperDim epicenter;
  GradedSubspace epicenter_ideal;  // inside L

  std::string rep_string(std::size_t i) const {
    return free_algebra->combo_string(multiplier_reps[i], generator_names);
  }
};

inline OracleRun run_presentation(const FreePresentation& p, const OracleLimits& limits = {}) {
  check_presentation(p);
  OracleRun run;
  run.generator_names.reserve(p.generators.size());
  for (const auto& [name, parity] : p.generators) {
    (void)parity;
    run.generator_names.push_back(name);
  }

  // A presentation with no generators presents the zero algebra; every
  // invariant is trivially (0|0).
  if (p.generators.empty()) {
    LieSuperalgebra zero(0, 0);
    run.relator_ideal = GradedSubspace(0, 0);
    run.bracket_ideal = GradedSubspace(0, 0);
    run.presented = Quotient{zero, GradedSubspace(0, 0), {}};
    run.epicenter_ideal = GradedSubspace(0, 0);
    return run;
  }

  std::vector<Parity> parities;
  parities.reserve(p.generators.size());
  for (const auto& [name, parity] : p.generators) {
    (void)name;
    parities.push_back(parity);
  }
  run.free_algebra = free_nilpotent_cached(parities, p.class_bound, limits);
  const TruncatedFreeAlgebra& F = *run.free_algebra;
  const LieSuperalgebra& FA = F.algebra();

  std::vector<SparseVec> relator_vectors;
  relator_vectors.reserve(p.relators.size());
  for (const auto& r : p.relators) relator_vectors.push_back(eval_term(F, r));

  run.relator_ideal = ideal_closure(FA, relator_vectors);

  // [F,R] is the span of brackets of basis vectors with R.
  run.bracket_ideal = GradedSubspace::zero(FA);
  for (const auto& row : run.relator_ideal.echelon().rows())
    for (auto& [j, w] : FA.bracket_with_basis(row)) {
      (void)j;
      run.bracket_ideal.insert(w);
    }

  run.presented = quotient(FA, run.relator_ideal);
  run.presented_dim = superdim(run.presented.algebra);
  run.derived_dim = superdim(derived_subalgebra(run.presented.algebra));

  // F' cap R: re-echelonize R with degree-1 columns ordered first; rows
  // whose pivot lands beyond the degree-1 block have no degree-1 support.
  const long long dim = FA.dim();
  auto shift = [&](Key k) { return F.degree(k) == 1 ? k : k + dim; };
  auto unshift = [&](Key k) { return k >= dim ? k - dim : k; };
  Echelon shifted;
  for (const auto& row : run.relator_ideal.echelon().rows()) shifted.insert(row.mapped(shift));
  std::vector<SparseVec> derived_cap_r;
  for (std::size_t r = 0; r < shifted.rows().size(); ++r) {
    if (shifted.pivots()[r] < dim) continue;
    derived_cap_r.push_back(shifted.rows()[r].mapped(unshift));
  }

  // Multiplier: (F' cap R) / [F,R], with canonical representatives.
  GradedSubspace reps = GradedSubspace::zero(FA);
  for (const auto& v : derived_cap_r) {
    SparseVec reduced = run.bracket_ideal.reduce(v);
    if (!reduced.zero()) reps.insert(reduced);
  }
  run.multiplier = superdim(reps);
  for (const auto& row : reps.echelon().rows()) run.multiplier_reps.push_back(row);
  {
    GradedSubspace cap = GradedSubspace::zero(FA);
    for (const auto& v : derived_cap_r) cap.insert(v);
    SuperDim expect = checked_sub(superdim(cap), superdim(run.bracket_ideal));
    if (expect != run.multiplier)
      throw InternalError("multiplier dimension bookkeeping mismatch: " + expect.to_string() +
                          " vs " + run.multiplier.to_string());
  }

  // Exterior square: F' / [F,R].
  SuperDim derived_f;
  for (int d = 2; d <= F.class_bound(); ++d) derived_f += F.degree_dims(d);
  run.exterior_square = checked_sub(derived_f, superdim(run.bracket_ideal));

  // Epicenter: image of Z(F/[F,R]) in L under the induced projection.
  Quotient cover = quotient(FA, run.bracket_ideal);
  GradedSubspace cover_center = center(cover.algebra);
  run.epicenter_ideal = GradedSubspace::zero(run.presented.algebra);
  for (const auto& row : cover_center.echelon().rows()) {
    std::vector<SparseVec::Term> lifted;
    for (const auto& [k, c] : row.terms())
      lifted.emplace_back(cover.ambient_of[static_cast<std::size_t>(k)], c);
    SparseVec image = run.presented.project(SparseVec::from_terms(std::move(lifted)));
    if (!image.zero()) run.epicenter_ideal.insert(image);
  }
  run.epicenter = superdim(run.epicenter_ideal);
  return run;
}

// Runs the presentation at its stated bound and once more at bound + 1; a
// difference means the bound was too small for the presented algebra.
inline OracleRun run_presentation_stable(const FreePresentation& p,
                                         const OracleLimits& limits = {}) {
  OracleRun base = run_presentation(p, limits);
  FreePresentation higher = p;
  higher.class_bound = p.class_bound + 1;
  OracleRun check = run_presentation(higher, limits);
  if (base.multiplier != check.multiplier || base.exterior_square != check.exterior_square ||
      base.epicenter != check.epicenter || base.presented_dim != check.presented_dim)
    throw DomainError(
        "oracle outputs changed when the class bound was raised; the stated "
        "class-bound " +
        std::to_string(p.class_bound) + " is too small for this presentation");
  return base;
}

struct MultiplierOracleResult {
  SuperDim value;
  std::vector<std::string> representative_words;
};

inline MultiplierOracleResult hopf_multiplier(const FreePresentation& p,
                                              const OracleLimits& limits = {}) {
  OracleRun run = run_presentation(p, limits);
  MultiplierOracleResult out{run.multiplier, {}};
  for (std::size_t i = 0; i < run.multiplier_reps.size(); ++i)
    out.representative_words.push_back(run.rep_string(i));
  return out;
}

inline SuperDim exterior_square_oracle(const FreePresentation& p,
                                       const OracleLimits& limits = {}) {
  return run_presentation(p, limits).exterior_square;
}

struct EpicenterOracleResult {
  SuperDim value;
  GradedSubspace ideal;  // inside the presented algebra
};

inline EpicenterOracleResult epicenter_oracle(const FreePresentation& p,
                                              const OracleLimits& limits = {}) {
  OracleRun run = run_presentation(p, limits);
  return {run.epicenter, run.epicenter_ideal};
}

// Convenience: the full oracle run for an algebra via its canonical
// presentation.
inline OracleRun run_algebra_oracle(const LieSuperalgebra& L, const OracleLimits& limits = {},
                                    int class_bound_override = 0) {
  FreePresentation p = presentation_of(L);
  if (class_bound_override > 0) p.class_bound = class_bound_override;
  return run_presentation(p, limits);
}

}  // namespace superlie
