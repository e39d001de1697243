/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#pragma once

#include "synth.hh"

#include <json.hpp>

namespace ratsynth {

using json = nlohmann::ordered_json;

json poly_to_json(const poly &p);
poly poly_from_json(const json &j);
json formula_to_json(const formula &f);
formula formula_from_json(const json &j);
json assignment_to_json(const assignment &a);
assignment assignment_from_json(const json &j);

json spec_to_json(const spec &s);
spec spec_from_json(const json &j);
/* SHA-256 (hex) of the canonical spec JSON text. */
std::string spec_digest(const spec &s);

json prog_to_json(const prog_ir &p);
/* Throws parse_error on malformed documents or a version mismatch. */
prog_ir prog_from_json(const json &j);
json report_to_json(const synth_report &r);

std::string dump(const json &j);

/* Replay file: JSON list of {"var": "p/q", ...}. */
std::vector<assignment> parse_replay(std::string_view text);

/* "x=1/2,y=-3" or "x=1/2 y=-3" */
assignment parse_assignment(std::string_view text);
std::string format_assignment(const assignment &a);

}
