//! Entity arena, scenegraph structure, component attachment, depth-first
//! visitor traversal and the observer-pattern event bus.

mod entity;
mod event;
mod visitor;
mod world;

pub use entity::{Entity, EntityId};
pub use event::{Event, Listener, Payload, PublishError, SubscriptionId};
pub use visitor::{traverse_dfs, Visitor};
pub use world::{EcssError, World};

#[cfg(test)]
mod tests;
