/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#pragma once

#include "formula.hh"

namespace ratsynth {

enum class qe_engine { vts2, cad1, none };

const char *engine_name(qe_engine e);
qe_engine engine_from_name(const std::string &s);

struct qe_result {
	formula psi;
	qe_engine engine = qe_engine::none;
	/* psi(A) <=> exists real y. phi(A, y) for every rational A */
	bool exact = false;
};

/* exists y. phi, dispatched to virtual substitution (degree <= 2 in y),
 * the one-parameter CAD, or an inexact False. */
qe_result eliminate_exists(const formula &phi, const var &y);

/* Virtual term substitution for atoms of degree <= 2 in y. Throws
 * degree_too_high. */
formula vts_quadratic(const formula &phi, const var &y);

/* Cylindrical decomposition of the line of the single remaining variable.
 * Cells whose boundary is an irrational point are never reported, which is
 * invisible on rational inputs. Throws too_many_free_variables. */
formula cad_one_param(const formula &phi, const var &y);

}
