#pragma once

#include "onerel/adian.hpp"
#include "onerel/classify.hpp"
#include "onerel/collatz.hpp"
#include "onerel/compress.hpp"
#include "onerel/presentation.hpp"
#include "onerel/search.hpp"
#include "onerel/trace.hpp"
#include "onerel/units.hpp"
#include "onerel/verdict.hpp"
#include "onerel/word.hpp"
