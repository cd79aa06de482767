#pragma once

namespace polariton2d {

/// Switches for the source terms of the third-order equations.
/// The default (everything on, no EID in the double-quantum combination)
/// is the full model.
struct PathwayMask {
  /// 2i g_ge alpha rho_ee feeds into third-order rho_eg (GSB + SE, the
  /// "contraction" terms).
  bool gsb_se = true;
  /// -i g_ef alpha rho_ee feeds into third-order rho_fe.
  bool esa = true;
  /// rho_fg-coupled feeds into third-order rho_eg and rho_fe.
  bool dqc_feed = true;
  /// -(beta/2) rho_eg rho_ee damping products.
  bool eid = true;
  /// Also apply the EID products to the Phi1+Phi2-Phi3 combination.
  bool eid_in_2qc = false;
  /// Forces g_ef = 0.
  bool disable_ef_coupling = false;

  bool contraction() const { return gsb_se; }
  void set_contraction(bool on) { gsb_se = on; }

  bool operator==(const PathwayMask&) const = default;
};

}  // namespace polariton2d
