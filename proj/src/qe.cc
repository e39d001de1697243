/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#include "ratsynth/errors.hh"
#include "ratsynth/qe.hh"

namespace ratsynth {

const char *engine_name(qe_engine e)
{
	switch (e) {
	case qe_engine::vts2: return "vts2";
	case qe_engine::cad1: return "cad1";
	case qe_engine::none: return "none";
	}
	return "none";
}

qe_engine engine_from_name(const std::string &s)
{
	if (s == "vts2")
		return qe_engine::vts2;
	if (s == "cad1")
		return qe_engine::cad1;
	if (s == "none")
		return qe_engine::none;
	throw parse_error("unknown QE engine '" + s + "'");
}

qe_result eliminate_exists(const formula &phi0, const var &y)
{
	formula phi = normalize(phi0);
	bool low_degree = true;
	for (const atom &a : atoms_of(phi))
		if (a.p.degree(y) > 2)
			low_degree = false;
	if (low_degree)
		return {vts_quadratic(phi, y), qe_engine::vts2, true};
	auto fv = free_vars(phi);
	fv.erase(y);
	if (fv.size() <= 1)
		return {cad_one_param(phi, y), qe_engine::cad1, true};
	return {formula::bottom(), qe_engine::none, false};
}

}
