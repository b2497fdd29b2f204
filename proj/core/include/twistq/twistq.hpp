#pragma once

#include "twistq/cartan.hpp"
#include "twistq/classify.hpp"
#include "twistq/error.hpp"
#include "twistq/json_io.hpp"
#include "twistq/lweight.hpp"
#include "twistq/prefactor.hpp"
#include "twistq/qchar.hpp"
#include "twistq/relcheck.hpp"
#include "twistq/scalar.hpp"
#include "twistq/syntax.hpp"
