#pragma once

// JSON conversions for the domain types (nlohmann::json ADL hooks).
//
// Matrix: {"rows": n, "cols": m, "entries": [[re, im], ...]} row-major.

#include <nlohmann/json.hpp>

#include "tempora/causal.hpp"
#include "tempora/channel.hpp"
#include "tempora/histories.hpp"
#include "tempora/pdm.hpp"
#include "tempora/procmat.hpp"
#include "tempora/qcore.hpp"
#include "tempora/siggames.hpp"

namespace tempora {

using json = nlohmann::json;

void to_json(json& j, const CMatrix& m);
void from_json(const json& j, CMatrix& m);

void to_json(json& j, const SpaceSpec& s);
void from_json(const json& j, SpaceSpec& s);

void to_json(json& j, const Pdm& r);
void from_json(const json& j, Pdm& r);

// Matrix schema plus "slots": [{"label": ..., "dim": ...}, ...].
void to_json(json& j, const ProcessMatrix& w);
void from_json(const json& j, ProcessMatrix& w);

// {"m_a", "m_b", "k_a", "k_b", "p": nested [a][b][x][y]}
void to_json(json& j, const CorrelationTable& t);
void from_json(const json& j, CorrelationTable& t);

// {"rho0": matrix, "steps": [{"unitary": matrix, "projectors": [matrix, ...]}, ...]}
void to_json(json& j, const HistoryFamily& f);
void from_json(const json& j, HistoryFamily& f);

// {"kraus": [matrix, ...]}
void to_json(json& j, const Channel& c);
void from_json(const json& j, Channel& c);

// {"outcomes": {"<label>": [matrix, ...]}}
void to_json(json& j, const Instrument& in);
void from_json(const json& j, Instrument& in);

// {"effects": {"<label>": matrix}}
void to_json(json& j, const Povm& p);
void from_json(const json& j, Povm& p);

// {"lambda_dist", "first": [instrument], "memory": channel, "second": [{"<a>": povm}]}
void to_json(json& j, const Strategy& s);
void from_json(const json& j, Strategy& s);

// {"n_x", "n_y", "n_a", "n_b", "pi", "l"}
void to_json(json& j, const GameSpec& g);
void from_json(const json& j, GameSpec& g);

json load_json_file(const std::string& path);

}  // namespace tempora
