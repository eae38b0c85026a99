#pragma once

#include "qgspec/asymptotics.hpp"
#include "qgspec/band_engine.hpp"
#include "qgspec/linalg.hpp"
#include "qgspec/spectral_probability.hpp"

#include <string>
#include <vector>

namespace qgspec {

/// 12 significant digits, '.' decimal separator.
std::string format_double(double v);

BandType parse_band_type(std::string_view name);
ThetaExtremum parse_theta_extremum(std::string_view name);

/// side,band_index,type,k_lo,k_hi,E_lo,E_hi
std::string bands_csv(const std::vector<BandStructure>& structures);

std::string bands_json(const std::vector<BandStructure>& structures);
/// Inverse of bands_json; doubles round-trip exactly.
std::vector<BandStructure> bands_from_json(const std::string& text);

/// k,E,family,embedded,note
std::string flat_bands_csv(const std::vector<FlatBand>& bands);
std::string flat_bands_json(const std::vector<FlatBand>& bands);

/// kind,c,d,ell,P,method,K_or_grid
std::string probability_csv(const std::vector<ProbabilityEstimate>& estimates);
std::string probability_json(const std::vector<ProbabilityEstimate>& estimates);

/// ratio,P,method,K_or_grid
std::string sweep_csv(const std::vector<SweepPoint>& points);
std::string sweep_json(const std::vector<SweepPoint>& points);

/// quantity,predicted,measured,relative_error
std::string asymptotics_csv(const std::vector<ComparisonRow>& rows);
std::string asymptotics_json(const std::vector<ComparisonRow>& rows);

struct OracleRow {
    double k = 0.0;
    double theta1 = 0.0;
    double theta2 = 0.0;
    double det_re = 0.0;
    double det_im = 0.0;
    double normalized = 0.0;
};

/// k,theta1,theta2,det_re,det_im,normalized
std::string oracle_csv(const std::vector<OracleRow>& rows);
std::string oracle_json(const std::vector<OracleRow>& rows);

/// row,col,re,im
std::string matrix_csv(const ComplexMatrix& m);
std::string matrix_csv(const RealMatrix& m);
/// {"rows": n, "cols": m, "re": [[...]], "im": [[...]]}
std::string matrix_json(const ComplexMatrix& m);
std::string matrix_json(const RealMatrix& m);

} // namespace qgspec
