#pragma once

#include "canonical.hpp"
#include "classify.hpp"
#include "curve.hpp"
#include "error.hpp"
#include "io.hpp"
#include "numsg.hpp"
#include "verification.hpp"
