#pragma once

#include "walkspec/errors.hpp"                      // IWYU pragma: export
#include "walkspec/exact/int_matrix.hpp"            // IWYU pragma: export
#include "walkspec/exact/numtheory.hpp"             // IWYU pragma: export
#include "walkspec/exact/rat_matrix.hpp"            // IWYU pragma: export
#include "walkspec/exact/smith.hpp"                 // IWYU pragma: export
#include "walkspec/graph/canonical.hpp"             // IWYU pragma: export
#include "walkspec/graph/enumerate.hpp"             // IWYU pragma: export
#include "walkspec/graph/graph.hpp"                 // IWYU pragma: export
#include "walkspec/graph/graph6.hpp"                // IWYU pragma: export
#include "walkspec/spectral/char_poly.hpp"          // IWYU pragma: export
#include "walkspec/spectral/classify.hpp"           // IWYU pragma: export
#include "walkspec/spectral/walk_matrix.hpp"        // IWYU pragma: export
#include "walkspec/cospectral/certificate.hpp"      // IWYU pragma: export
#include "walkspec/cospectral/certificate_io.hpp"   // IWYU pragma: export
#include "walkspec/cospectral/lemmas.hpp"           // IWYU pragma: export
#include "walkspec/cospectral/sweep.hpp"            // IWYU pragma: export
