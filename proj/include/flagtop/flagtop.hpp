#pragma once

#include "flagtop/face.hpp"
#include "flagtop/graph.hpp"
#include "flagtop/complex.hpp"
#include "flagtop/io.hpp"
#include "flagtop/validators.hpp"
#include "flagtop/constructions.hpp"
#include "flagtop/bounds.hpp"
#include "flagtop/canonical.hpp"
#include "flagtop/enumerate.hpp"
#include "flagtop/verify.hpp"
