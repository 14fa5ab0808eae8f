#pragma once

#include "biliaison.hpp"
#include "checked.hpp"
#include "error.hpp"
#include "gonality.hpp"
#include "hvector.hpp"
#include "quadform.hpp"
#include "verify.hpp"
