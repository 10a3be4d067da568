// Copyright 2026 The Bunching Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bunching/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace bunching::io {
namespace {

std::string statistics_name(const Statistics& stats) { return std::string(to_string(stats.model)); }

template <typename T>
T required(const Json& doc, const char* key, const char* what) {
    if (!doc.is_object() || !doc.contains(key)) {
        throw ValidationError(std::string(what) + ": missing field \"" + key + "\"");
    }
    try {
        return doc.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string(what) + ": field \"" + key + "\" has the wrong type");
    }
}

Json parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("cannot parse " + path.string() + ": " + e.what());
    }
}

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        out.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

Json optional_number(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

}  // namespace

std::string format_shortest(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, end);
}

std::string format_17(double value) {
    char buf[64];
    const int len = std::snprintf(buf, sizeof(buf), "%.17g", value);
    return std::string(buf, static_cast<std::size_t>(len));
}

Json unitary_to_json(const UnitaryMatrix& u) {
    const std::size_t m = u.dim();
    Json re = Json::array();
    Json im = Json::array();
    for (std::size_t i = 0; i < m; ++i) {
        Json re_row = Json::array();
        Json im_row = Json::array();
        for (std::size_t j = 0; j < m; ++j) {
            re_row.push_back(u(i, j).real());
            im_row.push_back(u(i, j).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return Json{{"m", m}, {"re", std::move(re)}, {"im", std::move(im)}};
}

UnitaryMatrix unitary_from_json(const Json& doc, double tol) {
    const auto m = required<long long>(doc, "m", "unitary file");
    if (m < 1) throw ValidationError("unitary file: m must be at least 1");
    const auto re = required<std::vector<std::vector<double>>>(doc, "re", "unitary file");
    const auto im = required<std::vector<std::vector<double>>>(doc, "im", "unitary file");
    const auto dim = static_cast<std::size_t>(m);
    if (re.size() != dim || im.size() != dim) {
        throw ValidationError("unitary file: \"re\" and \"im\" must have m = " + std::to_string(m) + " rows");
    }
    std::vector<Complex> entries;
    entries.reserve(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (re[i].size() != dim || im[i].size() != dim) {
            throw ValidationError("unitary file: row " + std::to_string(i + 1) + " must have m entries");
        }
        for (std::size_t j = 0; j < dim; ++j) entries.emplace_back(re[i][j], im[i][j]);
    }
    return UnitaryMatrix(ComplexMatrix(dim, dim, std::move(entries)), tol);
}

void save_unitary(const UnitaryMatrix& u, const std::filesystem::path& path) {
    write_text_file(path, unitary_to_json(u).dump(2) + "\n");
}

UnitaryMatrix load_unitary(const std::filesystem::path& path) { return unitary_from_json(parse_file(path)); }

Json circuit_to_json(const CircuitSpec& spec) {
    Json elements = Json::array();
    for (const CircuitElement& element : spec.elements) {
        if (const auto* c = std::get_if<Coupler>(&element)) {
            elements.push_back({{"type", "coupler"}, {"a", c->mode_a + 1}, {"b", c->mode_b + 1}, {"t", c->transmissivity}});
        } else {
            const auto& p = std::get<PhaseShifter>(element);
            elements.push_back({{"type", "phase"}, {"mode", p.mode + 1}, {"phi", p.phase}});
        }
    }
    return Json{{"m", spec.modes}, {"elements", std::move(elements)}};
}

CircuitSpec circuit_from_json(const Json& doc) {
    const auto m = required<long long>(doc, "m", "circuit file");
    if (m < 1) throw ValidationError("circuit file: m must be at least 1");
    if (!doc.contains("elements") || !doc.at("elements").is_array()) {
        throw ValidationError("circuit file: \"elements\" must be an array");
    }
    auto mode_field = [](const Json& e, const char* key, std::size_t index) {
        const auto v = required<long long>(e, key, "circuit element");
        if (v < 1) {
            throw ValidationError("circuit element #" + std::to_string(index + 1) + ": \"" + key +
                                  "\" must be a mode number >= 1");
        }
        return static_cast<std::size_t>(v - 1);
    };
    CircuitSpec spec{static_cast<std::size_t>(m), {}};
    const Json& elements = doc.at("elements");
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const Json& e = elements[i];
        const auto type = required<std::string>(e, "type", "circuit element");
        if (type == "coupler") {
            spec.elements.emplace_back(
                Coupler{mode_field(e, "a", i), mode_field(e, "b", i), required<double>(e, "t", "circuit element")});
        } else if (type == "phase") {
            spec.elements.emplace_back(PhaseShifter{mode_field(e, "mode", i), required<double>(e, "phi", "circuit element")});
        } else {
            throw ValidationError("circuit element #" + std::to_string(i + 1) + ": unknown type \"" + type + "\"");
        }
    }
    validate(spec);
    return spec;
}

CircuitSpec load_circuit(const std::filesystem::path& path) { return circuit_from_json(parse_file(path)); }

void write_distribution_csv(std::ostream& out, const Distribution& dist) {
    for (std::size_t j = 0; j < dist.modes(); ++j) out << 'h' << j + 1 << ',';
    out << "probability\n";
    for (std::size_t i = 0; i < dist.size(); ++i) {
        for (std::uint32_t c : dist.states()[i].counts()) out << c << ',';
        out << format_17(dist.probabilities()[i]) << '\n';
    }
}

Distribution read_distribution_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ValidationError("distribution CSV: missing header");
    const auto header = split(trim(line), ',');
    if (header.size() < 2 || header.back() != "probability") {
        throw ValidationError("distribution CSV: header must be h1,...,hm,probability");
    }
    const std::size_t modes = header.size() - 1;
    for (std::size_t j = 0; j < modes; ++j) {
        if (header[j] != "h" + std::to_string(j + 1)) throw ValidationError("distribution CSV: bad header column " + header[j]);
    }
    std::vector<OccupationState> states;
    std::vector<double> probs;
    std::size_t particles = 0;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) continue;
        const auto cells = split(trim(line), ',');
        if (cells.size() != modes + 1) throw ValidationError("distribution CSV: row " + std::to_string(row) + " has the wrong width");
        std::vector<std::uint32_t> counts(modes);
        for (std::size_t j = 0; j < modes; ++j) {
            auto [ptr, ec] = std::from_chars(cells[j].data(), cells[j].data() + cells[j].size(), counts[j]);
            if (ec != std::errc{} || ptr != cells[j].data() + cells[j].size()) {
                throw ValidationError("distribution CSV: bad occupation on row " + std::to_string(row));
            }
        }
        double p = 0.0;
        auto [ptr, ec] = std::from_chars(cells.back().data(), cells.back().data() + cells.back().size(), p);
        if (ec != std::errc{} || ptr != cells.back().data() + cells.back().size()) {
            throw ValidationError("distribution CSV: bad probability on row " + std::to_string(row));
        }
        OccupationState state(std::move(counts));
        if (states.empty()) particles = state.total();
        states.push_back(std::move(state));
        probs.push_back(p);
    }
    if (states.empty()) throw ValidationError("distribution CSV: no rows");
    return Distribution(modes, particles, std::move(states), std::move(probs));
}

Json report_to_json(const BunchingReport& report) {
    Json r_fb = Json::array();
    for (const auto& r : report.r_fb) r_fb.push_back(optional_number(r));
    Json doc{{"p_bunch", report.p_bunch},
             {"collision_free", report.collision_free},
             {"full_bunch", report.full_bunch},
             {"r_fb", std::move(r_fb)},
             {"model", statistics_name(report.statistics)}};
    if (report.statistics.indistinguishable_weight) doc["weight"] = *report.statistics.indistinguishable_weight;
    return doc;
}

void write_ensemble_csv(std::ostream& out, const EnsembleReport& report) {
    out << "index,p_b\n";
    for (std::size_t k = 0; k < report.per_sample.size(); ++k) {
        out << k << ',' << format_shortest(report.per_sample[k]) << '\n';
    }
}

Json ensemble_summary_json(const EnsembleReport& report) {
    Json doc{{"n", report.particles},
             {"m", report.modes},
             {"samples", report.samples},
             {"model", statistics_name(report.statistics)},
             {"mean", report.mean},
             {"std", report.stddev},
             {"band_low", report.band_low},
             {"band_high", report.band_high},
             {"histogram", {{"edges", report.histogram.edges}, {"counts", report.histogram.counts}}}};
    if (report.statistics.indistinguishable_weight) doc["weight"] = *report.statistics.indistinguishable_weight;
    return doc;
}

std::vector<std::size_t> parse_mode_list(std::string_view text, std::size_t modes) {
    std::vector<std::size_t> out;
    for (const std::string& raw : split(text, ',')) {
        const std::string cell = trim(raw);
        std::size_t mode = 0;
        auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), mode);
        if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size()) {
            throw ValidationError("'" + std::string(text) + "' is not a comma-separated list of mode numbers");
        }
        if (mode < 1 || mode > modes) {
            throw ValidationError("mode " + cell + " is outside 1.." + std::to_string(modes));
        }
        out.push_back(mode - 1);
    }
    return out;
}

std::vector<std::string> parse_label_list(std::string_view text) {
    std::vector<std::string> out;
    for (const std::string& raw : split(text, ',')) {
        std::string label = trim(raw);
        if (label.empty()) throw ValidationError("empty species label in '" + std::string(text) + "'");
        out.push_back(std::move(label));
    }
    return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path.string());
    out << contents;
    if (!out) throw ValidationError("failed writing " + path.string());
}

}  // namespace bunching::io
