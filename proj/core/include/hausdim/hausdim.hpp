#pragma once

#include "hausdim/bounds.hpp"
#include "hausdim/collocation.hpp"
#include "hausdim/error.hpp"
#include "hausdim/maps.hpp"
#include "hausdim/mesh.hpp"
#include "hausdim/parallel.hpp"
#include "hausdim/solver.hpp"
#include "hausdim/spectral.hpp"
#include "hausdim/version.hpp"
