#pragma once

namespace fixlat {

struct ToleranceProfile {
  double eq_tol = 1e-9;
  double rank_tol = 1e-10;
  double hash_grid = 1e-6;

  // Throws InvalidParameter unless 0 < rank_tol <= eq_tol <= hash_grid < 1.
  void validate() const;

  // Defaults, with eq_tol taken from FIXLAT_TOL when that is set. rank_tol is
  // pulled down to eq_tol if the override is tighter.
  static ToleranceProfile from_env();
};

}  // namespace fixlat
