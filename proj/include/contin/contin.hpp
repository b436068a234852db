#pragma once

#include "contin/bignat.hpp"
#include "contin/bounds.hpp"
#include "contin/census.hpp"
#include "contin/certified.hpp"
#include "contin/core.hpp"
#include "contin/errors.hpp"
#include "contin/explorer.hpp"
#include "contin/extremal.hpp"
#include "contin/report.hpp"
#include "contin/word.hpp"
