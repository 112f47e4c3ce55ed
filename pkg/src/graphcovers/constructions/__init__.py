from .sequences import (
    StackStep, ConstructionSequence, sequence, validate_sequence, realize,
    lift_to_simple, random_partial_simple_ktree,
    sequence_to_text, sequence_from_text,
)
from .flac import flac_cover
from .krausz import krausz_cover
from .contact import (
    Contact, ContactRepresentation, validate_representation,
    contact_star_forests, representation_to_text, representation_from_text,
)
from .slug import slug_cover
from .gadgets import gadget, fca_core

__all__ = [
    "StackStep", "ConstructionSequence", "sequence", "validate_sequence",
    "realize", "lift_to_simple", "random_partial_simple_ktree",
    "sequence_to_text", "sequence_from_text",
    "flac_cover", "krausz_cover",
    "Contact", "ContactRepresentation", "validate_representation",
    "contact_star_forests", "representation_to_text",
    "representation_from_text",
    "slug_cover", "gadget", "fca_core",
]
