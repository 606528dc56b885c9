// Copyright (c) ifcalc contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef IFCALC_INTERFERENCE_MAPPING_HPP
#define IFCALC_INTERFERENCE_MAPPING_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

#include "ifcalc/matrix.hpp"
#include "ifcalc/nonneg_vector.hpp"

namespace ifcalc {

/// Declared class of a self-mapping of the nonnegative orthant.
///
/// SI       monotone and strictly scalable (alpha*T(x) > T(alpha*x), alpha > 1)
/// WSI      monotone and weakly scalable  (alpha*T(x) >= T(alpha*x))
/// GI       monotone and positively homogeneous
/// Affine   x -> Xx + u with X >= 0, u >= 0 (exact evaluation)
/// LoadModel / CappedLoadModel / PowerModel
///          the cellular load-coupling mappings built by load_model.hpp
/// Custom   no class declared; excluded from asymptotic derivation
enum class MappingClass { SI, WSI, GI, Affine, LoadModel, CappedLoadModel, PowerModel, Custom };

const char* to_string(MappingClass cls);

/// True for every tag that declares (a subclass of) weak scalability.
bool is_wsi_subclass(MappingClass cls);

/// Evaluation interface for mappings T: R+^N -> R+^N. Instances are
/// immutable after construction and the evaluation function must be pure,
/// so they are safe to share across threads.
class InterferenceMapping {
public:
  using EvalFn = std::function<NonnegVector(const NonnegVector&)>;

  InterferenceMapping(std::size_t dim, MappingClass cls, EvalFn eval);

  /// x -> Xx + u, evaluated exactly as stated. X must be nonnegative and
  /// square with u.dim() rows.
  static InterferenceMapping affine(Matrix coeff, NonnegVector offset);

  /// GI-class linear mapping x -> Ax (A nonnegative square). Declared
  /// linear, so its asymptotic form can be recovered by probing basis
  /// vectors.
  static InterferenceMapping linear_gi(Matrix coeff);

  /// Custom mapping with a known linear asymptotic matrix attached (used by
  /// the load model, whose limit matrix has a closed form).
  static InterferenceMapping with_asymptote(std::size_t dim, MappingClass cls, EvalFn eval,
                                            Matrix asymptote);

  /// Evaluates the mapping; checks input/output dimension.
  NonnegVector operator()(const NonnegVector& x) const;

  std::size_t dim() const noexcept { return dim_; }
  MappingClass mapping_class() const noexcept { return cls_; }

  /// Declared linear (true for linear_gi); enables basis-probing.
  bool is_linear() const noexcept { return linear_; }

  /// Affine payload; null unless the class is Affine.
  const Matrix* affine_matrix() const noexcept;
  const NonnegVector* affine_offset() const noexcept;

  /// Known linear asymptote matrix, if any (Affine, LoadModel,
  /// CappedLoadModel, linear GI).
  const Matrix* asymptote_matrix() const noexcept;

private:
  std::size_t dim_;
  MappingClass cls_;
  EvalFn eval_;
  bool linear_ = false;
  std::optional<Matrix> affine_coeff_;
  std::optional<NonnegVector> affine_offset_;
  std::optional<Matrix> asymptote_;
};

}  // namespace ifcalc

#endif  // IFCALC_INTERFERENCE_MAPPING_HPP
