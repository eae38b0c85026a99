#pragma once

#include "qgspec/asymptotics.hpp"
#include "qgspec/band_engine.hpp"
#include "qgspec/errors.hpp"
#include "qgspec/export.hpp"
#include "qgspec/lattice.hpp"
#include "qgspec/linalg.hpp"
#include "qgspec/parallel.hpp"
#include "qgspec/secular_oracle.hpp"
#include "qgspec/spectral_kernels.hpp"
#include "qgspec/spectral_probability.hpp"
#include "qgspec/vertex_coupling.hpp"
