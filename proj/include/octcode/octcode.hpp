#pragma once

#include "octcode/errors.hpp"
#include "octcode/ring.hpp"
#include "octcode/code.hpp"
#include "octcode/torsion.hpp"
#include "octcode/ledger.hpp"
#include "octcode/covering.hpp"
#include "octcode/families.hpp"
#include "octcode/harness.hpp"
