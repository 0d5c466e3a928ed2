#pragma once
// Umbrella header.

#include "gk1/embeddings.hpp"
#include "gk1/enumerate.hpp"
#include "gk1/error.hpp"
#include "gk1/io.hpp"
#include "gk1/rng.hpp"
#include "gk1/successor.hpp"
#include "gk1/tables.hpp"
#include "gk1/verify.hpp"
#include "gk1/words.hpp"
