#pragma once

#include <cactus/blocks.hpp>
#include <cactus/canonical.hpp>
#include <cactus/closeness.hpp>
#include <cactus/constructions.hpp>
#include <cactus/dyadic.hpp>
#include <cactus/enumeration.hpp>
#include <cactus/graph.hpp>
#include <cactus/graph6.hpp>
#include <cactus/isomorphism.hpp>
#include <cactus/lemma_site.hpp>
#include <cactus/random_cactus.hpp>
#include <cactus/site_finder.hpp>
#include <cactus/transformations.hpp>
#include <cactus/verification.hpp>
