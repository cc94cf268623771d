#pragma once

#include "sonar/classic.hpp"
#include "sonar/error.hpp"
#include "sonar/field.hpp"
#include "sonar/fold.hpp"
#include "sonar/harness.hpp"
#include "sonar/io.hpp"
#include "sonar/number_theory.hpp"
#include "sonar/search.hpp"
#include "sonar/sequence.hpp"
#include "sonar/sidon.hpp"
#include "sonar/verify.hpp"
