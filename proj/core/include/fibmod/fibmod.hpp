#pragma once

#include "fibmod/closedform.hpp"
#include "fibmod/error.hpp"
#include "fibmod/explore.hpp"
#include "fibmod/format.hpp"
#include "fibmod/genfun.hpp"
#include "fibmod/hypercube.hpp"
#include "fibmod/json_io.hpp"
#include "fibmod/module.hpp"
#include "fibmod/multiseq.hpp"
#include "fibmod/recurrence.hpp"
#include "fibmod/ring.hpp"
