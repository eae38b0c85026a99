#include "qgspec/export.hpp"

#include "qgspec/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace qgspec {

using nlohmann::json;

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

BandType parse_band_type(std::string_view name) {
    for (auto t : {BandType::continuous, BandType::flat, BandType::degenerate_point})
        if (to_string(t) == name) return t;
    throw InvalidArgument("unknown band type '" + std::string(name) + "'");
}

ThetaExtremum parse_theta_extremum(std::string_view name) {
    for (auto t : {ThetaExtremum::gamma, ThetaExtremum::k_plus, ThetaExtremum::k_minus, ThetaExtremum::none})
        if (to_string(t) == name) return t;
    throw InvalidArgument("unknown quasimomentum label '" + std::string(name) + "'");
}

namespace {

std::string quoted(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

json spec_json(const LatticeSpec& s) {
    return {{"kind", std::string(to_string(s.kind))}, {"c", s.c}, {"d", s.d}, {"ell", s.ell}};
}

LatticeSpec spec_from(const json& j) {
    LatticeSpec s{parse_lattice_kind(j.at("kind").get<std::string>()), j.at("c").get<double>(),
                  j.at("d").get<double>(), j.at("ell").get<double>()};
    s.validate();
    return s;
}

} // namespace

std::string bands_csv(const std::vector<BandStructure>& structures) {
    std::ostringstream os;
    os << "side,band_index,type,k_lo,k_hi,E_lo,E_hi\n";
    for (const auto& bs : structures) {
        int index = 0;
        for (const auto& b : bs.intervals) {
            os << to_string(bs.side) << ',' << index++ << ',' << to_string(b.band_type) << ',' << format_double(b.k_lo)
               << ',' << format_double(b.k_hi) << ',' << format_double(b.energy_lo) << ','
               << format_double(b.energy_hi) << '\n';
        }
    }
    return os.str();
}

std::string bands_json(const std::vector<BandStructure>& structures) {
    json arr = json::array();
    for (const auto& bs : structures) {
        json intervals = json::array();
        for (const auto& b : bs.intervals) {
            intervals.push_back({{"k_lo", b.k_lo},
                                 {"k_hi", b.k_hi},
                                 {"band_type", std::string(to_string(b.band_type))},
                                 {"energy_lo", b.energy_lo},
                                 {"energy_hi", b.energy_hi},
                                 {"edge_theta_lo", std::string(to_string(b.edge_theta_lo))},
                                 {"edge_theta_hi", std::string(to_string(b.edge_theta_hi))}});
        }
        arr.push_back({{"spec", spec_json(bs.spec)},
                       {"side", std::string(to_string(bs.side))},
                       {"scan_k_max", bs.scan_k_max},
                       {"resolution", bs.resolution},
                       {"edge_tolerance", bs.edge_tolerance},
                       {"warnings", bs.warnings},
                       {"intervals", intervals}});
    }
    return arr.dump(2) + "\n";
}

std::vector<BandStructure> bands_from_json(const std::string& text) {
    std::vector<BandStructure> out;
    try {
        for (const auto& j : json::parse(text)) {
            BandStructure bs;
            bs.spec = spec_from(j.at("spec"));
            bs.side = parse_side(j.at("side").get<std::string>());
            bs.scan_k_max = j.at("scan_k_max").get<double>();
            bs.resolution = j.at("resolution").get<double>();
            bs.edge_tolerance = j.at("edge_tolerance").get<double>();
            bs.warnings = j.at("warnings").get<std::vector<std::string>>();
            for (const auto& i : j.at("intervals")) {
                SpectralInterval s;
                s.k_lo = i.at("k_lo").get<double>();
                s.k_hi = i.at("k_hi").get<double>();
                s.side = bs.side;
                s.band_type = parse_band_type(i.at("band_type").get<std::string>());
                s.energy_lo = i.at("energy_lo").get<double>();
                s.energy_hi = i.at("energy_hi").get<double>();
                s.edge_theta_lo = parse_theta_extremum(i.at("edge_theta_lo").get<std::string>());
                s.edge_theta_hi = parse_theta_extremum(i.at("edge_theta_hi").get<std::string>());
                bs.intervals.push_back(s);
            }
            out.push_back(std::move(bs));
        }
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed band JSON: ") + e.what());
    }
    return out;
}

std::string flat_bands_csv(const std::vector<FlatBand>& bands) {
    std::ostringstream os;
    os << "k,E,family,embedded,note\n";
    for (const auto& b : bands)
        os << format_double(b.k) << ',' << format_double(b.k * b.k) << ',' << to_string(b.family) << ','
           << (b.embedded ? "true" : "false") << ',' << quoted(b.multiplicity_note) << '\n';
    return os.str();
}

std::string probability_csv(const std::vector<ProbabilityEstimate>& estimates) {
    std::ostringstream os;
    os << "kind,c,d,ell,P,method,K_or_grid\n";
    for (const auto& e : estimates) {
        const double k_or_grid = e.method == ProbabilityMethod::torus_area ? static_cast<double>(e.grid_n) : e.K_energy;
        os << to_string(e.spec.kind) << ',' << format_double(e.spec.c) << ',' << format_double(e.spec.d) << ','
           << format_double(e.spec.ell) << ',' << format_double(e.value) << ',' << to_string(e.method) << ','
           << format_double(k_or_grid) << '\n';
    }
    return os.str();
}

std::string probability_json(const std::vector<ProbabilityEstimate>& estimates) {
    json arr = json::array();
    for (const auto& e : estimates)
        arr.push_back({{"spec", spec_json(e.spec)},
                       {"value", e.value},
                       {"method", std::string(to_string(e.method))},
                       {"K_energy", e.K_energy},
                       {"grid_n", e.grid_n}});
    return arr.dump(2) + "\n";
}

std::string sweep_csv(const std::vector<SweepPoint>& points) {
    std::ostringstream os;
    os << "ratio,P,method,K_or_grid\n";
    for (const auto& p : points)
        os << format_double(p.ratio) << ',' << format_double(p.estimate.value) << ',' << to_string(p.estimate.method)
           << ',' << format_double(p.estimate.K_energy) << '\n';
    return os.str();
}

std::string asymptotics_csv(const std::vector<ComparisonRow>& rows) {
    std::ostringstream os;
    os << "quantity,predicted,measured,relative_error\n";
    for (const auto& r : rows)
        os << r.quantity << ',' << format_double(r.predicted) << ',' << format_double(r.measured) << ','
           << format_double(r.relative_error) << '\n';
    return os.str();
}

std::string oracle_csv(const std::vector<OracleRow>& rows) {
    std::ostringstream os;
    os << "k,theta1,theta2,det_re,det_im,normalized\n";
    for (const auto& r : rows)
        os << format_double(r.k) << ',' << format_double(r.theta1) << ',' << format_double(r.theta2) << ','
           << format_double(r.det_re) << ',' << format_double(r.det_im) << ',' << format_double(r.normalized) << '\n';
    return os.str();
}

std::string matrix_csv(const ComplexMatrix& m) {
    std::ostringstream os;
    os << "row,col,re,im\n";
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << i << ',' << j << ',' << format_double(m(i, j).real()) << ',' << format_double(m(i, j).imag()) << '\n';
    return os.str();
}

std::string matrix_csv(const RealMatrix& m) {
    std::ostringstream os;
    os << "row,col,re,im\n";
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) os << i << ',' << j << ',' << format_double(m(i, j)) << ",0\n";
    return os.str();
}

std::string flat_bands_json(const std::vector<FlatBand>& bands) {
    json arr = json::array();
    for (const auto& b : bands)
        arr.push_back({{"k", b.k},
                       {"E", b.k * b.k},
                       {"family", std::string(to_string(b.family))},
                       {"embedded", b.embedded},
                       {"note", b.multiplicity_note}});
    return arr.dump(2) + "\n";
}

std::string sweep_json(const std::vector<SweepPoint>& points) {
    json arr = json::array();
    for (const auto& p : points)
        arr.push_back({{"ratio", p.ratio},
                       {"P", p.estimate.value},
                       {"method", std::string(to_string(p.estimate.method))},
                       {"K_energy", p.estimate.K_energy},
                       {"spec", spec_json(p.estimate.spec)}});
    return arr.dump(2) + "\n";
}

std::string asymptotics_json(const std::vector<ComparisonRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows)
        arr.push_back({{"quantity", r.quantity},
                       {"predicted", r.predicted},
                       {"measured", r.measured},
                       {"relative_error", r.relative_error}});
    return arr.dump(2) + "\n";
}

std::string oracle_json(const std::vector<OracleRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows)
        arr.push_back({{"k", r.k},
                       {"theta1", r.theta1},
                       {"theta2", r.theta2},
                       {"det_re", r.det_re},
                       {"det_im", r.det_im},
                       {"normalized", r.normalized}});
    return arr.dump(2) + "\n";
}

namespace {

template <class M, class Re, class Im>
std::string matrix_json_impl(const M& m, Re re, Im im) {
    json jr = json::array(), ji = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json rr = json::array(), ri = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            rr.push_back(re(m(i, j)));
            ri.push_back(im(m(i, j)));
        }
        jr.push_back(rr);
        ji.push_back(ri);
    }
    json out = {{"rows", m.rows()}, {"cols", m.cols()}, {"re", jr}, {"im", ji}};
    return out.dump(2) + "\n";
}

} // namespace

std::string matrix_json(const ComplexMatrix& m) {
    return matrix_json_impl(m, [](std::complex<double> v) { return v.real(); },
                            [](std::complex<double> v) { return v.imag(); });
}

std::string matrix_json(const RealMatrix& m) {
    return matrix_json_impl(m, [](double v) { return v; }, [](double) { return 0.0; });
}

} // namespace qgspec
