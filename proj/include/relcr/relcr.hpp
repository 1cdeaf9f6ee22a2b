#pragma once

#include "relcr/brute_oracle.hpp"
#include "relcr/kempf.hpp"
#include "relcr/relcr_checker.hpp"
#include "relcr/semisimplify.hpp"
