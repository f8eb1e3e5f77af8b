#pragma once

#include <string>
#include <vector>

#include "relcat/arrow/grothendieck.hpp"
#include "relcat/arrow/path.hpp"

namespace relcat {

/// Result of comparing a Grothendieck construction with the category it is
/// claimed to equal, through an explicit comparison functor Φ.
struct GrIdentityReport {
  bool functor = false;       // Φ preserves the composition table
  bool isomorphism = false;   // bijective on objects and morphisms
  bool projections = false;   // π ∘ Φ = π_Gr
  bool encodings = false;     // canonical encodings agree after renaming along Φ
  std::string witness;
  bool ok() const { return functor && isomorphism && projections && encodings; }
};

/// Z ↦ fX⌢n⌣Z (the part of the n-arrow fibers over Z and 1_Z), each z acting
/// by composition with the last leg. Everything is read in Cat-hat.
struct SliceFunctor {
  NArrowFiber fiber;
  std::vector<SubcatResult> parts;  // per object of Z, with inclusion into the fibers
  GrothendieckInput input;
};
SliceFunctor slice_functor(const FinFunctor& f, int n);
/// Reuses a path object of cat_hat(f.target), possibly cut down to zigzags
/// starting in the image of f. The first form builds the cut-down one.
SliceFunctor slice_functor(const FinFunctor& f, const PathPtr& path);
GrIdentityReport check_slice_identity(const SliceFunctor& s);

/// X ↦ fX⌢n⌣Z0 (zigzags from fX to Z0 and maps fixing both ends), covariant
/// in X for even n and contravariant for odd n.
struct CoSliceFunctor {
  NArrowFiber fiber;
  ObjIdx end = 0;
  SubcatResult whole;               // the fibers over Z0 and 1_Z0
  std::vector<SubcatResult> parts;  // per object of X, with inclusion into the fibers
  GrothendieckInput input;
};
CoSliceFunctor co_slice_functor(const FinFunctor& f, int n, ObjIdx z0);
GrIdentityReport check_co_slice_identity(const CoSliceFunctor& s);

}  // namespace relcat
