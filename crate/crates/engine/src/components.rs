//! The built-in component types. Components are plain data; all behavior
//! lives in the systems that digest them.

use math3d::{Mat4, Vec3};

use crate::animation::{Joint, Keyframe};
use crate::ecss::EntityId;
use crate::softrender::{Material, PackedVertex, ShadingModel};
use cga::GaTransform;

/// Local transform in matrix form plus the matrices the traversal systems
/// cache on it each frame.
#[derive(Debug, Clone, PartialEq)]
pub struct BasicTransform {
    /// Coordinate system relative to the parent entity (a T*R*S product or
    /// any invertible affine matrix).
    pub local: Mat4,
    /// Local-to-world, written by the transform system.
    pub l2w: Mat4,
    /// projection * root2cam * l2w, written by the camera system.
    pub l2cam: Mat4,
}

impl BasicTransform {
    pub fn new(local: Mat4) -> BasicTransform {
        BasicTransform { local, l2w: Mat4::IDENTITY, l2cam: Mat4::IDENTITY }
    }

    pub fn identity() -> BasicTransform {
        BasicTransform::new(Mat4::IDENTITY)
    }
}

/// Projection matrix plus the root-to-camera matrix derived each frame.
#[derive(Debug, Clone, PartialEq)]
pub struct Camera {
    pub projection: Mat4,
    /// Inverse of the camera entity's l2w, written by the camera system.
    pub root2cam: Mat4,
}

impl Camera {
    pub fn new(projection: Mat4) -> Camera {
        Camera { projection, root2cam: Mat4::IDENTITY }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum MeshColors {
    Uniform(Vec3),
    PerVertex(Vec<Vec3>),
}

/// Basic geometry: vertex positions, triangle indices, optional per-vertex
/// normals and colors. `revision` bumps on every mutation so the init system
/// knows when to repack vertex arrays.
#[derive(Debug, Clone, PartialEq)]
pub struct RenderMesh {
    pub vertices: Vec<Vec3>,
    pub indices: Vec<[u32; 3]>,
    pub normals: Option<Vec<Vec3>>,
    pub colors: Option<MeshColors>,
    pub revision: u64,
}

impl RenderMesh {
    pub fn new(vertices: Vec<Vec3>, indices: Vec<[u32; 3]>) -> RenderMesh {
        RenderMesh { vertices, indices, normals: None, colors: None, revision: 0 }
    }

    pub fn with_normals(mut self, normals: Vec<Vec3>) -> RenderMesh {
        self.normals = Some(normals);
        self
    }

    pub fn with_uniform_color(mut self, color: Vec3) -> RenderMesh {
        self.colors = Some(MeshColors::Uniform(color));
        self
    }

    /// First index out of range, if any.
    pub fn invalid_index(&self) -> Option<u32> {
        let n = self.vertices.len() as u32;
        self.indices.iter().flatten().copied().find(|i| *i >= n)
    }

    pub fn mark_dirty(&mut self) {
        self.revision += 1;
    }
}

/// One joint influence on a vertex.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Influence {
    pub joint: usize,
    pub weight: f64,
}

/// Mesh extended with skinning data: the undeformed bind geometry, joint
/// tree, per-vertex influences (up to 4) and a keyframe track. The embedded
/// `mesh` holds the current (deformed) geometry the render pipeline sees.
#[derive(Debug, Clone, PartialEq)]
pub struct SkinnedMesh {
    pub mesh: RenderMesh,
    pub bind_vertices: Vec<Vec3>,
    pub bind_normals: Option<Vec<Vec3>>,
    pub influences: Vec<Vec<Influence>>,
    pub joints: Vec<Joint>,
    pub track: Vec<Keyframe>,
}

impl SkinnedMesh {
    pub fn new(
        mesh: RenderMesh,
        influences: Vec<Vec<Influence>>,
        joints: Vec<Joint>,
        track: Vec<Keyframe>,
    ) -> SkinnedMesh {
        let bind_vertices = mesh.vertices.clone();
        let bind_normals = mesh.normals.clone();
        SkinnedMesh { mesh, bind_vertices, bind_normals, influences, joints, track }
    }
}

/// Packed interleaved vertex/index buffers built from a mesh by the init
/// system, ready for the rasterizer (the CPU stand-in for a VAO/VBO pair).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct VertexArray {
    pub vertices: Vec<PackedVertex>,
    pub indices: Vec<u32>,
    /// Mesh revision this buffer was built from; `None` until first build.
    pub built_revision: Option<u64>,
    /// How many times the buffer has been (re)built.
    pub build_count: u64,
}

impl VertexArray {
    pub fn empty() -> VertexArray {
        VertexArray::default()
    }
}

/// Shading model selector plus material coefficients; the per-draw uniforms
/// (mvp, model matrix, lights, view position) are supplied by the render
/// system when it submits the draw.
#[derive(Debug, Clone, PartialEq)]
pub struct ShaderParams {
    pub shading: ShadingModel,
    pub material: Material,
}

impl ShaderParams {
    pub fn blinn_phong(material: Material) -> ShaderParams {
        ShaderParams { shading: ShadingModel::BlinnPhong, material }
    }

    pub fn flat() -> ShaderParams {
        ShaderParams { shading: ShadingModel::Flat, material: Material::default_gray() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComponentKind {
    BasicTransform,
    GaTransform,
    Camera,
    RenderMesh,
    SkinnedMesh,
    VertexArray,
    ShaderParams,
}

impl std::fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            ComponentKind::BasicTransform => "BasicTransform",
            ComponentKind::GaTransform => "GATransform",
            ComponentKind::Camera => "Camera",
            ComponentKind::RenderMesh => "RenderMesh",
            ComponentKind::SkinnedMesh => "SkinnedMesh",
            ComponentKind::VertexArray => "VertexArray",
            ComponentKind::ShaderParams => "ShaderParams",
        };
        f.write_str(name)
    }
}

/// Owned component value, as handed to `World::add_component`.
#[derive(Debug, Clone)]
pub enum Component {
    BasicTransform(BasicTransform),
    GaTransform(GaTransform),
    Camera(Camera),
    RenderMesh(RenderMesh),
    SkinnedMesh(SkinnedMesh),
    VertexArray(VertexArray),
    ShaderParams(ShaderParams),
}

impl Component {
    pub fn kind(&self) -> ComponentKind {
        match self {
            Component::BasicTransform(_) => ComponentKind::BasicTransform,
            Component::GaTransform(_) => ComponentKind::GaTransform,
            Component::Camera(_) => ComponentKind::Camera,
            Component::RenderMesh(_) => ComponentKind::RenderMesh,
            Component::SkinnedMesh(_) => ComponentKind::SkinnedMesh,
            Component::VertexArray(_) => ComponentKind::VertexArray,
            Component::ShaderParams(_) => ComponentKind::ShaderParams,
        }
    }
}

/// Borrowed view of a stored component; what the columnar stores hand out.
#[derive(Debug, Clone, Copy)]
pub enum ComponentRef<'a> {
    BasicTransform(&'a BasicTransform),
    GaTransform(&'a GaTransform),
    Camera(&'a Camera),
    RenderMesh(&'a RenderMesh),
    SkinnedMesh(&'a SkinnedMesh),
    VertexArray(&'a VertexArray),
    ShaderParams(&'a ShaderParams),
}

impl ComponentRef<'_> {
    pub fn kind(&self) -> ComponentKind {
        match self {
            ComponentRef::BasicTransform(_) => ComponentKind::BasicTransform,
            ComponentRef::GaTransform(_) => ComponentKind::GaTransform,
            ComponentRef::Camera(_) => ComponentKind::Camera,
            ComponentRef::RenderMesh(_) => ComponentKind::RenderMesh,
            ComponentRef::SkinnedMesh(_) => ComponentKind::SkinnedMesh,
            ComponentRef::VertexArray(_) => ComponentKind::VertexArray,
            ComponentRef::ShaderParams(_) => ComponentKind::ShaderParams,
        }
    }
}

/// Addresses one stored component: owner, kind and the slot index within
/// (owner, kind) in attachment order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ComponentKey {
    pub owner: EntityId,
    pub kind: ComponentKind,
    pub slot: usize,
}
