#pragma once

#include "betti/decompose.hpp"
#include "betti/errors.hpp"
#include "betti/ferrers.hpp"
#include "betti/io.hpp"
#include "betti/linear.hpp"
#include "betti/oseq.hpp"
#include "betti/purelift.hpp"
#include "betti/rational.hpp"
#include "betti/tables.hpp"
