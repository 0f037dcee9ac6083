#pragma once

#include "submodkit/bits.hpp"
#include "submodkit/builders.hpp"
#include "submodkit/errors.hpp"
#include "submodkit/hypercube.hpp"
#include "submodkit/inequality_lab.hpp"
#include "submodkit/io.hpp"
#include "submodkit/joint_pmf.hpp"
#include "submodkit/oracle.hpp"
#include "submodkit/predicates.hpp"
#include "submodkit/report.hpp"
#include "submodkit/scalar_transform.hpp"
#include "submodkit/set_function.hpp"
#include "submodkit/tolerance.hpp"
