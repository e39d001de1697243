/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#pragma once

#include "poly.hh"

namespace ratsynth {

/* Resultant of p and q w.r.t. v, computed along the subresultant PRS.
 * Agrees with the Sylvester determinant (p rows first). */
poly resultant(const poly &p, const poly &q, const var &v);

/* (-1)^(n(n-1)/2) res(p, dp/dv) / lc(p); throws zero_polynomial. */
poly discriminant(const poly &p, const var &v);

/* Resultant when it is not identically zero; otherwise the leading
 * coefficient (in v) of the last nonzero element of the subresultant PRS,
 * i.e. the first principal subresultant coefficient that does not vanish
 * identically, up to a nonzero factor. */
poly first_nonzero_psc(const poly &p, const poly &q, const var &v);

}
