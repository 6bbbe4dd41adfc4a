use std::collections::HashMap;

use super::entity::EntityId;

/// Message published on the world's event bus.
#[derive(Debug, Clone, PartialEq)]
pub struct Event {
    pub topic: String,
    pub payload: Payload,
}

impl Event {
    pub fn new(topic: &str, payload: Payload) -> Event {
        Event { topic: topic.to_string(), payload }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Payload {
    Empty,
    Bool(bool),
    Int(i64),
    Real(f64),
    Text(String),
    Entity(EntityId),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubscriptionId(pub u64);

pub type Listener = Box<dyn FnMut(&Event) -> Result<(), String> + Send + Sync>;

/// Listener failures collected during one publish; delivery never skips
/// remaining subscribers because an earlier one failed.
#[derive(Debug)]
pub struct PublishError {
    pub failures: Vec<(SubscriptionId, String)>,
}

impl std::fmt::Display for PublishError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} listener(s) failed:", self.failures.len())?;
        for (id, msg) in &self.failures {
            write!(f, " [{:?}: {}]", id, msg)?;
        }
        Ok(())
    }
}

impl std::error::Error for PublishError {}

#[derive(Default)]
pub(crate) struct EventBus {
    topics: HashMap<String, Vec<(SubscriptionId, Listener)>>,
    next_id: u64,
}

impl EventBus {
    pub(crate) fn subscribe(&mut self, topic: &str, listener: Listener) -> SubscriptionId {
        let id = SubscriptionId(self.next_id);
        self.next_id += 1;
        self.topics.entry(topic.to_string()).or_default().push((id, listener));
        id
    }

    pub(crate) fn publish(&mut self, event: &Event) -> Result<(), PublishError> {
        let Some(listeners) = self.topics.get_mut(&event.topic) else {
            return Ok(());
        };
        let mut failures = Vec::new();
        for (id, listener) in listeners.iter_mut() {
            if let Err(msg) = listener(event) {
                failures.push((*id, msg));
            }
        }
        if failures.is_empty() {
            Ok(())
        } else {
            Err(PublishError { failures })
        }
    }
}

impl std::fmt::Debug for EventBus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let counts: Vec<(&str, usize)> =
            self.topics.iter().map(|(k, v)| (k.as_str(), v.len())).collect();
        f.debug_struct("EventBus").field("topics", &counts).finish()
    }
}
