#pragma once

#include "redcycle/catalog.hpp"
#include "redcycle/classify.hpp"
#include "redcycle/error.hpp"
#include "redcycle/extension.hpp"
#include "redcycle/framing.hpp"
#include "redcycle/int_matrix.hpp"
#include "redcycle/io.hpp"
#include "redcycle/isomorphism.hpp"
#include "redcycle/permutation.hpp"
#include "redcycle/quiver.hpp"
#include "redcycle/reddening.hpp"
#include "redcycle/search.hpp"
#include "redcycle/sequence.hpp"
