#pragma once

// Everything in one include.
#include "hyperconnect/scalar.hpp"
#include "hyperconnect/series.hpp"
#include "hyperconnect/hypergeometric.hpp"
#include "hyperconnect/families.hpp"
#include "hyperconnect/connection.hpp"
#include "hyperconnect/identities.hpp"
#include "hyperconnect/io.hpp"
