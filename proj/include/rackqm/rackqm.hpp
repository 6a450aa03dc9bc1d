#pragma once

#include "rackqm/error.hpp"
#include "rackqm/number.hpp"
#include "rackqm/word.hpp"
#include "rackqm/group_table.hpp"
#include "rackqm/finite_rack.hpp"
#include "rackqm/adjoint.hpp"
#include "rackqm/free_product.hpp"
#include "rackqm/sampler.hpp"
#include "rackqm/linalg.hpp"
#include "rackqm/quasimorphism.hpp"
#include "rackqm/cochain.hpp"
#include "rackqm/certify.hpp"
#include "rackqm/io.hpp"
