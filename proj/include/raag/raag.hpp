#pragma once

#include "raag/error.hpp"
#include "raag/graph.hpp"
#include "raag/structure.hpp"
#include "raag/canonical.hpp"
#include "raag/recognition.hpp"
#include "raag/linalg.hpp"
#include "raag/homology.hpp"
#include "raag/invariants.hpp"
#include "raag/enumeration.hpp"
#include "raag/serialize.hpp"
