#pragma once

#include "harmap/area.hpp"
#include "harmap/bounds.hpp"
#include "harmap/complex_series.hpp"
#include "harmap/disk_grid.hpp"
#include "harmap/harmonic_map.hpp"
#include "harmap/landau.hpp"
#include "harmap/lipschitz.hpp"
#include "harmap/majorant.hpp"
#include "harmap/mapping_file.hpp"
#include "harmap/norms.hpp"
#include "harmap/runtime.hpp"
