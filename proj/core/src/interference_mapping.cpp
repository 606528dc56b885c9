// Copyright (c) ifcalc contributors
// SPDX-License-Identifier: Apache-2.0

#include "ifcalc/interference_mapping.hpp"

#include <stdexcept>
#include <utility>

namespace ifcalc {

const char* to_string(MappingClass cls) {
  switch (cls) {
    case MappingClass::SI: return "SI";
    case MappingClass::WSI: return "WSI";
    case MappingClass::GI: return "GI";
    case MappingClass::Affine: return "Affine";
    case MappingClass::LoadModel: return "LoadModel";
    case MappingClass::CappedLoadModel: return "CappedLoadModel";
    case MappingClass::PowerModel: return "PowerModel";
    case MappingClass::Custom: return "Custom";
  }
  return "?";
}

bool is_wsi_subclass(MappingClass cls) { return cls != MappingClass::Custom; }

InterferenceMapping::InterferenceMapping(std::size_t dim, MappingClass cls, EvalFn eval)
    : dim_(dim), cls_(cls), eval_(std::move(eval)) {
  if (dim_ == 0) throw std::invalid_argument("InterferenceMapping: dimension must be >= 1");
  if (!eval_) throw std::invalid_argument("InterferenceMapping: missing evaluation function");
}

InterferenceMapping InterferenceMapping::affine(Matrix coeff, NonnegVector offset) {
  if (coeff.rows() != coeff.cols() || coeff.rows() != offset.dim()) {
    throw std::invalid_argument("affine: coefficient matrix must be square and match the offset");
  }
  if (!coeff.nonnegative()) {
    throw std::invalid_argument("affine: coefficient matrix must be nonnegative");
  }
  InterferenceMapping m(
      offset.dim(), MappingClass::Affine,
      [coeff, offset](const NonnegVector& x) { return add(coeff.apply(x), offset); });
  m.affine_coeff_ = coeff;
  m.affine_offset_ = offset;
  m.asymptote_ = std::move(coeff);
  return m;
}

InterferenceMapping InterferenceMapping::linear_gi(Matrix coeff) {
  if (coeff.rows() != coeff.cols()) {
    throw std::invalid_argument("linear_gi: matrix must be square");
  }
  if (!coeff.nonnegative()) {
    throw std::invalid_argument("linear_gi: matrix must be nonnegative");
  }
  InterferenceMapping m(coeff.rows(), MappingClass::GI,
                        [coeff](const NonnegVector& x) { return coeff.apply(x); });
  m.linear_ = true;
  m.asymptote_ = std::move(coeff);
  return m;
}

InterferenceMapping InterferenceMapping::with_asymptote(std::size_t dim, MappingClass cls,
                                                        EvalFn eval, Matrix asymptote) {
  if (asymptote.rows() != dim || asymptote.cols() != dim) {
    throw std::invalid_argument("with_asymptote: asymptote matrix dimension mismatch");
  }
  InterferenceMapping m(dim, cls, std::move(eval));
  m.asymptote_ = std::move(asymptote);
  return m;
}

NonnegVector InterferenceMapping::operator()(const NonnegVector& x) const {
  if (x.dim() != dim_) {
    throw std::invalid_argument("InterferenceMapping: input dimension mismatch");
  }
  NonnegVector y = eval_(x);
  if (y.dim() != dim_) {
    throw std::invalid_argument("InterferenceMapping: evaluation changed the dimension");
  }
  return y;
}

const Matrix* InterferenceMapping::affine_matrix() const noexcept {
  return affine_coeff_ ? &*affine_coeff_ : nullptr;
}

const NonnegVector* InterferenceMapping::affine_offset() const noexcept {
  return affine_offset_ ? &*affine_offset_ : nullptr;
}

const Matrix* InterferenceMapping::asymptote_matrix() const noexcept {
  return asymptote_ ? &*asymptote_ : nullptr;
}

}  // namespace ifcalc
